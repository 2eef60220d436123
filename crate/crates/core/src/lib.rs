//! Exact construction of the uniform W(A4) polytopes.
//!
//! All geometry lives in the field Q(√2, √5). The group W(A4) is available
//! both as integer matrices on Dynkin labels ([`weyl`]) and as pairs of unit
//! quaternions ([`representation`]); the two are cross-checked element by
//! element. On top of that sit the W(A3) slicing into 3D ([`projection`]),
//! the dual polytopes ([`dual`]) and an exact hull for rendering ([`hull`]).
//!
//! ```
//! use a4poly::{dual_polytope, orbit, rat, Weight};
//!
//! let truncated = Weight::from_ints([1, 1, 0, 0]);
//! assert_eq!(orbit(&truncated).len(), 20);
//! let dual = dual_polytope(&truncated).unwrap();
//! assert_eq!(dual.scales[&1], rat(3, 7));
//! assert_eq!((dual.vertex_count(), dual.cell_count()), (10, 20));
//! ```

pub mod binary;
pub mod dual;
pub mod error;
pub mod field;
pub mod hull;
pub mod projection;
pub mod quaternion;
pub mod representation;
pub mod weyl;

pub use binary::{build_set, verify_group, GroupReport, QuaternionSet, SetName};
pub use dual::{
    cell_types, dual_cell_geometry, dual_polytope, dual_scales, incident_cells, Cell, CellType, DualCellGeometry,
    DualPolytope, ScaleReference, Shell,
};
pub use error::{Error, Result};
pub use field::{rat, FieldScalar, Rational, Sign};
pub use hull::{extract_faces, Mesh3D, Point3};
pub use projection::{dominant_slices, A3OrbitSlice, PBasis};
pub use quaternion::{OrthogonalAction, Quaternion};
pub use representation::{build_w_a4, coxeter_element, verify_representation, weight_to_quaternion, RootData};
pub use weyl::{dynkin_flip, generate_group, orbit, CartanData, GroupElement, IntMatrix, Subgroup, Weight, WeylGroup};
