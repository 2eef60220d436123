//! Cells of a uniform orbit polytope and its cell-transitive dual.
//!
//! A cell of `O(Λ)` is the orbit of `Λ` under a rank-3 parabolic subgroup
//! `W_J`, `J = {1..4} \ {k}`, moved around by coset representatives. Its
//! center lies on the ray of `ωₖ`, which `W_J` fixes. The dual's vertices are
//! the cell centers rescaled so that the centers of the cells around each
//! primal vertex lie in the hyperplane orthogonal to it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{rat, FieldScalar, Rational};
use crate::hull::{extract_faces, Mesh3D, Point3};
use crate::quaternion::Quaternion;
use crate::representation::weight_to_quaternion;
use crate::weyl::{
    affine_rank, generate_group, orbit, orbit_with_elements, parabolic, parabolic_orbit, GroupElement, Weight,
    GROUP_ORDER, RANK,
};

const ALL: [usize; RANK] = [1, 2, 3, 4];

/// The parabolic `{1..4} \ {k}`.
pub fn complement(k: usize) -> Vec<usize> {
    ALL.iter().copied().filter(|&i| i != k).collect()
}

/// One class of congruent cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellType {
    /// Removed node; the cell center lies on the ray of `ωₖ`.
    pub k: usize,
    pub generators: Vec<usize>,
    /// `W_J Λ`, the cell through `Λ`.
    pub base_vertices: Vec<Weight>,
    /// Number of cells of this type, `|W(A4) ωₖ|`.
    pub count: usize,
    pub shape: String,
}

impl CellType {
    pub fn vertex_count(&self) -> usize {
        self.base_vertices.len()
    }

    pub fn center_ray(&self) -> Weight {
        Weight::fundamental(self.k)
    }
}

fn is_one(a: &Rational) -> bool {
    *a == rat(1, 1)
}

/// Name of the uniform polyhedron `W_J Λ`, from the labels on `J`.
pub fn shape_label(k: usize, w: &Weight) -> String {
    let l = |i: usize| w.label(i).clone();
    let nz = |a: &Rational| !a.is_zero();
    let uniform = (1..=RANK).filter(|&i| i != k).all(|i| w.label(i).is_zero() || is_one(w.label(i)));
    let name = match k {
        1 | 4 => {
            let [b1, b2, b3] = if k == 4 { [l(1), l(2), l(3)] } else { [l(2), l(3), l(4)] };
            match (nz(&b1), nz(&b2), nz(&b3)) {
                (true, false, false) | (false, false, true) => "tetrahedron",
                (false, true, false) => "octahedron",
                (true, true, false) | (false, true, true) => "truncated tetrahedron",
                (true, false, true) => "cuboctahedron",
                (true, true, true) => "truncated octahedron",
                (false, false, false) => "point",
            }
        }
        _ => {
            // A1 × A2 with the A1 node at 1 (k = 2) or 4 (k = 3)
            let (a1, pair) = if k == 2 { (l(1), [l(3), l(4)]) } else { (l(4), [l(1), l(2)]) };
            match (nz(&a1), nz(&pair[0]), nz(&pair[1])) {
                (true, true, true) => "hexagonal prism",
                (true, true, false) | (true, false, true) => "triangular prism",
                _ => "degenerate prism",
            }
        }
    };
    if uniform || name == "point" {
        name.to_string()
    } else {
        format!("{name} (non-uniform)")
    }
}

fn require_cells(w: &Weight) -> Result<()> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(Box::new(w.clone())));
    }
    if w.is_zero() {
        return Err(Error::ZeroWeight(Box::new(w.clone())));
    }
    Ok(())
}

/// Cell classes of `O(Λ)`: every `k` whose parabolic orbit spans 3D.
pub fn cell_types(w: &Weight) -> Result<Vec<CellType>> {
    require_cells(w)?;
    let mut out = Vec::new();
    for k in ALL {
        let generators = complement(k);
        let base_vertices = parabolic_orbit(&generators, w);
        if affine_rank(&base_vertices) != 3 {
            continue;
        }
        let count = GROUP_ORDER / parabolic(&generators)?.order();
        out.push(CellType { k, shape: shape_label(k, w), generators, base_vertices, count });
    }
    Ok(out)
}

/// A single cell `g · W_J Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub k: usize,
    pub coset_rep: GroupElement,
    /// `g ωₖ`, the unscaled center direction.
    pub center: Weight,
    pub vertices: BTreeSet<Weight>,
}

/// All cells of `O(Λ)`, grouped by type in increasing `k`.
pub fn all_cells(w: &Weight) -> Result<Vec<Cell>> {
    let types = cell_types(w)?;
    let mut cells = Vec::new();
    for t in &types {
        for (center, g) in orbit_with_elements(&ALL, &t.center_ray()) {
            let vertices = t.base_vertices.iter().map(|v| g.apply(v)).collect();
            cells.push(Cell { k: t.k, coset_rep: g, center, vertices });
        }
    }
    Ok(cells)
}

/// Cells containing `vertex`.
pub fn incident_cells(w: &Weight, vertex: &Weight) -> Result<Vec<Cell>> {
    if !orbit(w).contains(vertex) {
        return Err(Error::NotInOrbit { weight: Box::new(w.clone()), vertex: Box::new(vertex.clone()) });
    }
    Ok(all_cells(w)?.into_iter().filter(|c| c.vertices.contains(vertex)).collect())
}

/// Per-type incidence count at a vertex, `#cellsₖ · |cellₖ| / |O(Λ)|`.
pub fn incidence_counts(w: &Weight) -> Result<BTreeMap<usize, usize>> {
    let n = orbit(w).len();
    Ok(cell_types(w)?.iter().map(|t| (t.k, t.count * t.vertex_count() / n)).collect())
}

/// Which cell center keeps scale 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScaleReference {
    /// The type with the most cells at a vertex, lowest `k` on ties.
    #[default]
    MostIncident,
    Node(usize),
}

/// `sₖ = (ω_ref, Λ) / (ωₖ, Λ)` over the cell types, so that every rescaled
/// center `sₖ ωₖ` has the same scalar product with `Λ`.
pub fn dual_scales(w: &Weight, reference: ScaleReference) -> Result<BTreeMap<usize, Rational>> {
    let types = cell_types(w)?;
    let heights: BTreeMap<usize, Rational> = types.iter().map(|t| (t.k, t.center_ray().dot(w))).collect();
    let ref_k = match reference {
        ScaleReference::MostIncident => {
            let counts = incidence_counts(w)?;
            let best = counts.values().copied().max().unwrap_or(0);
            *counts
                .iter()
                .find(|(_, &n)| n == best)
                .map(|(k, _)| k)
                .ok_or_else(|| Error::ZeroWeight(Box::new(w.clone())))?
        }
        ScaleReference::Node(k) => {
            if !heights.contains_key(&k) {
                return Err(Error::Verification(format!("node {k} carries no cells of {w}")));
            }
            k
        }
    };
    let h = heights[&ref_k].clone();
    Ok(heights.into_iter().map(|(k, hk)| (k, &h / hk)).collect())
}

/// A dual cell: the rescaled centers of the cells around one primal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCell {
    pub primal_vertex: Weight,
    /// Indices into [`DualPolytope::vertices`].
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPolytope {
    pub weight: Weight,
    pub scales: BTreeMap<usize, Rational>,
    pub cell_types: Vec<CellType>,
    /// `⋃ sₖ O(ωₖ)`, sorted.
    pub vertices: Vec<Weight>,
    /// Node index of each vertex.
    pub vertex_class: Vec<usize>,
    pub cells: Vec<DualCell>,
}

impl DualPolytope {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Squared radius and vertex count per node class.
    pub fn shells(&self) -> Vec<Shell> {
        self.scales
            .iter()
            .map(|(&k, s)| Shell {
                k,
                scale: s.clone(),
                radius_sq: s * s * Weight::fundamental(k).norm_sq(),
                count: self.vertex_class.iter().filter(|&&c| c == k).count(),
            })
            .collect()
    }
}

/// Vertices of one scale class of the dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shell {
    pub k: usize,
    pub scale: Rational,
    pub radius_sq: Rational,
    pub count: usize,
}

pub fn dual_polytope(w: &Weight) -> Result<DualPolytope> {
    dual_polytope_with(w, ScaleReference::default())
}

pub fn dual_polytope_with(w: &Weight, reference: ScaleReference) -> Result<DualPolytope> {
    if !w.is_uniform_pattern() {
        return Err(Error::NotUniform(Box::new(w.clone())));
    }
    let scales = dual_scales(w, reference)?;
    let types = cell_types(w)?;
    let cells = all_cells(w)?;

    let mut tagged: Vec<(Weight, usize)> = cells.iter().map(|c| (c.center.scale(&scales[&c.k]), c.k)).collect();
    tagged.sort();
    tagged.dedup();
    let index: HashMap<&Weight, usize> = tagged.iter().enumerate().map(|(i, (v, _))| (v, i)).collect();
    let cell_vertex: Vec<usize> = cells.iter().map(|c| index[&c.center.scale(&scales[&c.k])]).collect();

    let primal = orbit(w);
    let mut around: BTreeMap<&Weight, Vec<usize>> = primal.iter().map(|v| (v, Vec::new())).collect();
    for (cell, &dv) in cells.iter().zip(&cell_vertex) {
        for v in &cell.vertices {
            around.get_mut(v).expect("cell vertices lie in the orbit").push(dv);
        }
    }
    let dual_cells = around
        .into_iter()
        .map(|(v, mut verts)| {
            verts.sort_unstable();
            DualCell { primal_vertex: v.clone(), vertices: verts }
        })
        .collect();

    let (vertices, vertex_class) = tagged.into_iter().unzip();
    Ok(DualPolytope { weight: w.clone(), scales, cell_types: types, vertices, vertex_class, cells: dual_cells })
}

/// One vertex of a dual cell in the local frame of its primal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalVertex {
    pub k: usize,
    pub weight: Weight,
    /// `(u, eᵢ v)` for i = 0..4, with `v` the primal vertex (not normalized).
    pub frame: [FieldScalar; 4],
}

/// An edge of the dual cell with its exact squared length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalEdge {
    pub a: usize,
    pub b: usize,
    pub length_sq: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCellGeometry {
    pub weight: Weight,
    pub primal_vertex: Weight,
    pub scales: BTreeMap<usize, Rational>,
    /// `|v|²`; frame coordinates divide by `|v|` to become orthonormal.
    pub frame_norm_sq: Rational,
    /// Common value of `(u, v)` over the cell's vertices.
    pub height: Rational,
    pub flat: bool,
    pub vertices: Vec<LocalVertex>,
    /// Orthonormal coordinates on `(q1, q2, q3)` when `|v|` lies in the field.
    pub normalized: Option<Vec<[FieldScalar; 3]>>,
    pub mesh: Mesh3D,
    pub edges: Vec<LocalEdge>,
    /// Squared radii of the cell's vertices by node class.
    pub shells: Vec<(usize, Rational)>,
}

impl DualCellGeometry {
    /// Distinct squared edge lengths, ascending.
    pub fn edge_lengths_sq(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self.edges.iter().map(|e| e.length_sq.clone()).collect();
        set.into_iter().collect()
    }

    /// `(x1, x2, x3) / |v|` as floats.
    pub fn coordinates_f64(&self) -> Vec<[f64; 3]> {
        use num_traits::ToPrimitive;
        let norm = self.frame_norm_sq.to_f64().unwrap_or(f64::NAN).sqrt();
        self.vertices.iter().map(|v| [1, 2, 3].map(|i| v.frame[i].to_f64() / norm)).collect()
    }
}

/// The dual cell at `vertex`, placed in the frame `q0 ∝ v, qᵢ = eᵢ q0`.
pub fn dual_cell_geometry(w: &Weight, vertex: &Weight) -> Result<DualCellGeometry> {
    dual_cell_geometry_with(w, vertex, ScaleReference::default())
}

pub fn dual_cell_geometry_with(w: &Weight, vertex: &Weight, reference: ScaleReference) -> Result<DualCellGeometry> {
    let scales = dual_scales(w, reference)?;
    let cells = incident_cells(w, vertex)?;
    let v = weight_to_quaternion(vertex);
    let frame: [Quaternion; 4] = std::array::from_fn(|i| if i == 0 { v.clone() } else { &Quaternion::unit(i) * &v });

    let mut vertices: Vec<LocalVertex> = Vec::new();
    for c in &cells {
        let u = c.center.scale(&scales[&c.k]);
        if vertices.iter().any(|x| x.weight == u) {
            continue;
        }
        let q = weight_to_quaternion(&u);
        vertices.push(LocalVertex { k: c.k, frame: std::array::from_fn(|i| q.dot(&frame[i])), weight: u });
    }
    vertices.sort_by(|a, b| a.k.cmp(&b.k).then_with(|| a.weight.cmp(&b.weight)));

    let heights: BTreeSet<Rational> = vertices.iter().map(|x| x.weight.dot(vertex)).collect();
    let flat = heights.len() == 1;
    let height = heights.into_iter().next().unwrap_or_else(Rational::zero);
    let frame_norm_sq = vertex.norm_sq();

    let points: Vec<Point3> = vertices.iter().map(|x| [1, 2, 3].map(|i| x.frame[i].clone())).collect();
    let mut mesh = extract_faces(&points)?;
    mesh.tag = Some(format!("dual cell of {w} at {vertex}"));
    let edges = mesh
        .edges()
        .into_iter()
        .map(|(a, b)| LocalEdge { a, b, length_sq: (&vertices[a].weight - &vertices[b].weight).norm_sq() })
        .collect();

    let normalized = FieldScalar::sqrt_rational(&frame_norm_sq).map(|norm| {
        let inv = norm.inverse().expect("nonzero vertex");
        points.iter().map(|p| p.clone().map(|x| &x * &inv)).collect()
    });

    let mut shells: Vec<(usize, Rational)> = vertices.iter().map(|x| (x.k, x.weight.norm_sq())).collect();
    shells.dedup();

    Ok(DualCellGeometry {
        weight: w.clone(),
        primal_vertex: vertex.clone(),
        scales,
        frame_norm_sq,
        height,
        flat,
        vertices,
        normalized,
        mesh,
        edges,
        shells,
    })
}

/// Elements of the stabilizer of `vertex` that permute the dual cell,
/// returned as the permutations they induce on its vertex list.
pub fn dual_cell_symmetry(geometry: &DualCellGeometry) -> Vec<Vec<usize>> {
    let group = generate_group();
    let stab = group.stabilizer(&geometry.primal_vertex);
    let verts: Vec<&Weight> = geometry.vertices.iter().map(|x| &x.weight).collect();
    let mut perms: Vec<Vec<usize>> = stab
        .elements()
        .iter()
        .filter_map(|g| verts.iter().map(|v| verts.iter().position(|u| **u == g.apply(v))).collect())
        .collect();
    perms.sort();
    perms.dedup();
    perms
}

/// The ten uniform polytopes treated individually: each nonzero 0/1 pattern
/// up to the diagram flip, flip-fixed ones first.
pub const UNIFORM_CATALOG: [[i64; RANK]; 10] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 1, 1, 0],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [1, 1, 1, 1],
];
