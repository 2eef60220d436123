//! JSON reports. Exact values are strings; every float field is a display
//! aid and is dropped under `--exact`.

use std::collections::BTreeMap;

use a4poly::dual::{dual_cell_symmetry, incidence_counts};
use a4poly::field::format_significant;
use a4poly::representation::RepresentationReport;
use a4poly::{
    generate_group, orbit, weight_to_quaternion, A3OrbitSlice, CellType, DualCellGeometry, DualPolytope, FieldScalar,
    GroupReport, Quaternion, QuaternionSet, Rational, Weight,
};
use serde::Serialize;

/// Float rendering settings shared by all reports.
#[derive(Clone, Copy, Debug)]
pub struct Floats {
    pub digits: usize,
    pub enabled: bool,
}

impl Floats {
    fn round(&self, x: f64) -> f64 {
        format_significant(x, self.digits).parse().unwrap_or(x)
    }

    fn some<T>(&self, f: impl FnOnce() -> T) -> Option<T> {
        self.enabled.then(f)
    }

    fn vec<const N: usize>(&self, xs: [f64; N]) -> [f64; N] {
        xs.map(|x| self.round(x))
    }
}

fn labels(w: &Weight) -> [String; 4] {
    w.labels().clone().map(|r| r.to_string())
}

fn scalars<const N: usize>(xs: &[FieldScalar; N]) -> [String; N] {
    std::array::from_fn(|i| xs[i].to_string())
}

fn quaternion(q: &Quaternion) -> [String; 4] {
    scalars(q.components())
}

fn rational_f64(r: &Rational) -> f64 {
    FieldScalar::from_rational(r).to_f64()
}

#[derive(Serialize)]
pub struct OrbitReport {
    pub weight: [String; 4],
    pub dominant: bool,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizer_generators: Option<Vec<usize>>,
    pub norm_sq: String,
    /// Dynkin labels of each orbit point.
    pub vertices: Vec<[String; 4]>,
    /// The same points as quaternions.
    pub quaternions: Vec<[String; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quaternions_f64: Option<Vec<[f64; 4]>>,
}

impl OrbitReport {
    pub fn new(w: &Weight, floats: Floats) -> Self {
        let points = orbit(w);
        let stab = generate_group().stabilizer(w);
        let quats: Vec<Quaternion> = points.iter().map(weight_to_quaternion).collect();
        OrbitReport {
            weight: labels(w),
            dominant: w.is_dominant(),
            orbit_size: points.len(),
            stabilizer_order: stab.order(),
            stabilizer_generators: stab.generators.clone(),
            norm_sq: w.norm_sq().to_string(),
            vertices: points.iter().map(labels).collect(),
            quaternions: quats.iter().map(quaternion).collect(),
            quaternions_f64: floats.some(|| quats.iter().map(|q| floats.vec(q.to_f64())).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct SliceReport {
    pub a3_labels: [String; 3],
    pub charge: String,
    pub cosets: Vec<usize>,
    pub vertex_count: usize,
    pub p0_offset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0_offset_f64: Option<f64>,
    /// Coordinates on `(p1, p2, p3)`.
    pub vertices: Vec<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices_f64: Option<Vec<[f64; 3]>>,
}

#[derive(Serialize)]
pub struct ProjectReport {
    pub weight: [String; 4],
    pub slices: Vec<SliceReport>,
}

impl ProjectReport {
    pub fn new(w: &Weight, slices: &[A3OrbitSlice], floats: Floats) -> Self {
        let slices = slices
            .iter()
            .map(|s| SliceReport {
                a3_labels: s.a3_labels.clone().map(|r| r.to_string()),
                charge: s.charge.to_string(),
                cosets: s.cosets.clone(),
                vertex_count: s.vertex_count(),
                p0_offset: s.offset.to_string(),
                p0_offset_f64: floats.some(|| floats.round(s.offset.to_f64())),
                vertices: s.vertices3d.iter().map(scalars).collect(),
                vertices_f64: floats
                    .some(|| s.vertices3d.iter().map(|v| floats.vec(v.clone().map(|x| x.to_f64()))).collect()),
            })
            .collect();
        ProjectReport { weight: labels(w), slices }
    }
}

#[derive(Serialize)]
pub struct CellTypeReport {
    pub k: usize,
    pub shape_labels: Vec<String>,
    pub count: usize,
    pub vertex_count: usize,
    /// Cells of this type meeting at each primal vertex.
    pub incidence: usize,
}

impl CellTypeReport {
    fn new(c: &CellType, incidence: &BTreeMap<usize, usize>) -> Self {
        CellTypeReport {
            k: c.k,
            shape_labels: vec![c.shape.clone()],
            count: c.count,
            vertex_count: c.vertex_count(),
            incidence: incidence.get(&c.k).copied().unwrap_or(0),
        }
    }
}

#[derive(Serialize)]
pub struct ShellReport {
    pub k: usize,
    pub scale: String,
    pub radius_sq: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_f64: Option<f64>,
    pub count: usize,
}

#[derive(Serialize)]
pub struct DualReport {
    pub weight: [String; 4],
    pub cell_types: Vec<CellTypeReport>,
    pub scales: BTreeMap<usize, String>,
    pub dual_vertex_count: usize,
    pub dual_cell_count: usize,
    pub shells: Vec<ShellReport>,
    pub sample_cell: CellReport,
}

impl DualReport {
    pub fn new(d: &DualPolytope, sample: &DualCellGeometry, floats: Floats) -> a4poly::Result<Self> {
        let incidence = incidence_counts(&d.weight)?;
        let shells = d
            .shells()
            .into_iter()
            .map(|s| ShellReport {
                k: s.k,
                scale: s.scale.to_string(),
                radius_sq: s.radius_sq.to_string(),
                radius_f64: floats.some(|| floats.round(rational_f64(&s.radius_sq).sqrt())),
                count: s.count,
            })
            .collect();
        Ok(DualReport {
            weight: labels(&d.weight),
            cell_types: d.cell_types.iter().map(|c| CellTypeReport::new(c, &incidence)).collect(),
            scales: d.scales.iter().map(|(k, s)| (*k, s.to_string())).collect(),
            dual_vertex_count: d.vertex_count(),
            dual_cell_count: d.cell_count(),
            shells,
            sample_cell: CellReport::new(sample, floats),
        })
    }
}

#[derive(Serialize)]
pub struct LocalVertexReport {
    /// Node whose cell centres give this vertex.
    pub k: usize,
    pub weight: [String; 4],
    /// Components on the frame `(Λ, e1 Λ, e2 Λ, e3 Λ)`.
    pub frame: [String; 4],
}

#[derive(Serialize)]
pub struct EdgeReport {
    pub a: usize,
    pub b: usize,
    pub length_sq: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length_f64: Option<f64>,
}

#[derive(Serialize)]
pub struct CellReport {
    pub weight: [String; 4],
    pub primal_vertex: [String; 4],
    pub scales: BTreeMap<usize, String>,
    pub frame_norm_sq: String,
    pub height: String,
    pub flat: bool,
    pub vertices: Vec<LocalVertexReport>,
    /// Unit-frame coordinates, present when the frame norm lies in the field.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<Vec<[String; 3]>>,
    /// Unit-frame coordinates as floats, always available.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates_f64: Option<Vec<[f64; 3]>>,
    pub faces: Vec<Vec<usize>>,
    pub edges: Vec<EdgeReport>,
    pub euler_characteristic: i64,
    pub symmetry_order: usize,
}

impl CellReport {
    pub fn new(g: &DualCellGeometry, floats: Floats) -> Self {
        CellReport {
            weight: labels(&g.weight),
            primal_vertex: labels(&g.primal_vertex),
            scales: g.scales.iter().map(|(k, s)| (*k, s.to_string())).collect(),
            frame_norm_sq: g.frame_norm_sq.to_string(),
            height: g.height.to_string(),
            flat: g.flat,
            vertices: g
                .vertices
                .iter()
                .map(|v| LocalVertexReport { k: v.k, weight: labels(&v.weight), frame: scalars(&v.frame) })
                .collect(),
            normalized: g.normalized.as_ref().map(|pts| pts.iter().map(scalars).collect()),
            coordinates_f64: floats.some(|| g.coordinates_f64().into_iter().map(|p| floats.vec(p)).collect()),
            faces: g.mesh.faces.clone(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeReport {
                    a: e.a,
                    b: e.b,
                    length_sq: e.length_sq.to_string(),
                    length_f64: floats.some(|| floats.round(rational_f64(&e.length_sq).sqrt())),
                })
                .collect(),
            euler_characteristic: g.mesh.euler_characteristic(),
            symmetry_order: dual_cell_symmetry(g).len(),
        }
    }
}

#[derive(Serialize)]
pub struct SetReport {
    pub name: String,
    pub size: usize,
    pub is_group: bool,
    pub elements: Vec<[String; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements_f64: Option<Vec<[f64; 4]>>,
}

impl SetReport {
    pub fn new(name: String, set: &QuaternionSet, check: &GroupReport, floats: Floats) -> Self {
        SetReport {
            name,
            size: set.len(),
            is_group: check.is_group(),
            elements: set.iter().map(quaternion).collect(),
            elements_f64: floats.some(|| set.iter().map(|q| floats.vec(q.to_f64())).collect()),
        }
    }
}

#[derive(Serialize)]
pub struct WeylReport {
    pub order: usize,
    pub actions: usize,
    pub rotations: usize,
    pub reflections: usize,
    pub bijective: bool,
    pub homomorphism: bool,
    pub generators_match: bool,
    pub orbits_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
}

impl From<&RepresentationReport> for WeylReport {
    fn from(r: &RepresentationReport) -> Self {
        WeylReport {
            order: r.weyl_order,
            actions: r.action_count,
            rotations: r.rotations,
            reflections: r.reflections,
            bijective: r.bijective,
            homomorphism: r.homomorphism,
            generators_match: r.generators_match,
            orbits_match: r.orbits_match,
            first_mismatch: r.first_mismatch.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct GroupsReport {
    pub sets: Vec<SetReport>,
    pub weyl: WeylReport,
}
