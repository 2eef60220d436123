//! Exact face lattice of small 3D convex point sets.
//!
//! Faces are found by brute force over point triples: a triple spans a face
//! plane when every other point lies weakly on one side. All side tests are
//! exact; the cyclic order of a face's vertices uses floats and only affects
//! presentation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, Sign};

pub type Point3 = [FieldScalar; 3];

fn sub(a: &Point3, b: &Point3) -> Point3 {
    std::array::from_fn(|i| &a[i] - &b[i])
}

fn cross(a: &Point3, b: &Point3) -> Point3 {
    [&(&a[1] * &b[2]) - &(&a[2] * &b[1]), &(&a[2] * &b[0]) - &(&a[0] * &b[2]), &(&a[0] * &b[1]) - &(&a[1] * &b[0])]
}

fn dot(a: &Point3, b: &Point3) -> FieldScalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

fn is_zero(v: &Point3) -> bool {
    v.iter().all(FieldScalar::is_zero)
}

/// Dimension of the affine span of `points`.
pub fn affine_rank(points: &[Point3]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let Some(u) = points.iter().map(|p| sub(p, first)).find(|d| !is_zero(d)) else {
        return 0;
    };
    let Some(n) = points.iter().map(|p| cross(&u, &sub(p, first))).find(|c| !is_zero(c)) else {
        return 1;
    };
    if points.iter().all(|p| dot(&n, &sub(p, first)).is_zero()) {
        2
    } else {
        3
    }
}

/// A polyhedral surface with exact vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mesh3D {
    pub vertices: Vec<Point3>,
    /// Vertex cycles, counter-clockwise seen from outside.
    pub faces: Vec<Vec<usize>>,
    pub tag: Option<String>,
}

impl Mesh3D {
    /// Undirected edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for f in &self.faces {
            for (k, &a) in f.iter().enumerate() {
                let b = f[(k + 1) % f.len()];
                set.insert((a.min(b), a.max(b)));
            }
        }
        set.into_iter().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    /// Every edge borders exactly two faces, traversed in opposite directions.
    pub fn is_closed(&self) -> bool {
        let mut directed = BTreeSet::new();
        for f in &self.faces {
            for (k, &a) in f.iter().enumerate() {
                if !directed.insert((a, f[(k + 1) % f.len()])) {
                    return false;
                }
            }
        }
        directed.iter().all(|&(a, b)| directed.contains(&(b, a)))
    }

    /// Number of faces with each vertex count, as `(size, count)`.
    pub fn face_census(&self) -> Vec<(usize, usize)> {
        let mut census = std::collections::BTreeMap::new();
        for f in &self.faces {
            *census.entry(f.len()).or_insert(0) += 1;
        }
        census.into_iter().collect()
    }

    pub fn vertices_f64(&self) -> Vec<[f64; 3]> {
        self.vertices.iter().map(|p| p.clone().map(|x| x.to_f64())).collect()
    }
}

/// Orders the points of a planar face counter-clockwise about `normal`.
fn order_cycle(points: &[Point3], face: &mut [usize], normal: &Point3) {
    let pts: Vec<[f64; 3]> = face.iter().map(|&i| points[i].clone().map(|x| x.to_f64())).collect();
    let n = normal.clone().map(|x| x.to_f64());
    let m = pts.len() as f64;
    let centroid: [f64; 3] = std::array::from_fn(|k| pts.iter().map(|p| p[k]).sum::<f64>() / m);
    let u: [f64; 3] = std::array::from_fn(|k| pts[0][k] - centroid[k]);
    let v = [n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]];
    let angle = |p: &[f64; 3]| {
        let d: [f64; 3] = std::array::from_fn(|k| p[k] - centroid[k]);
        let x: f64 = (0..3).map(|k| d[k] * u[k]).sum();
        let y: f64 = (0..3).map(|k| d[k] * v[k]).sum();
        y.atan2(x)
    };
    let mut keyed: Vec<(f64, usize)> = face.iter().zip(&pts).map(|(&i, p)| (angle(p), i)).collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (slot, (_, i)) in face.iter_mut().zip(keyed) {
        *slot = i;
    }
}

/// Convex hull faces of `points`. Duplicate points are merged first; the
/// mesh indexes the deduplicated list.
pub fn extract_faces(points: &[Point3]) -> Result<Mesh3D> {
    let mut pts: Vec<Point3> = Vec::with_capacity(points.len());
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let rank = affine_rank(&pts);
    if rank < 3 {
        return Err(Error::DegenerateHull { rank });
    }
    let n = pts.len();
    let mut found: Vec<(BTreeSet<usize>, Point3)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let eij = sub(&pts[j], &pts[i]);
            for k in j + 1..n {
                if found.iter().any(|(f, _)| f.contains(&i) && f.contains(&j) && f.contains(&k)) {
                    continue;
                }
                let normal = cross(&eij, &sub(&pts[k], &pts[i]));
                if is_zero(&normal) {
                    continue;
                }
                let mut on_plane = BTreeSet::new();
                let (mut pos, mut neg) = (false, false);
                for (m, p) in pts.iter().enumerate() {
                    match dot(&normal, &sub(p, &pts[i])).sign() {
                        Sign::Zero => {
                            on_plane.insert(m);
                        }
                        Sign::Positive => pos = true,
                        Sign::Negative => neg = true,
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                let outward = if pos { normal.map(|x| -x) } else { normal };
                found.push((on_plane, outward));
            }
        }
    }
    let faces = found
        .into_iter()
        .map(|(set, normal)| {
            let mut face: Vec<usize> = set.into_iter().collect();
            order_cycle(&pts, &mut face, &normal);
            face
        })
        .collect();
    Ok(Mesh3D { vertices: pts, faces, tag: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn p(x: [i64; 3]) -> Point3 {
        x.map(FieldScalar::from_int)
    }

    #[test]
    fn octahedron() {
        let pts: Vec<Point3> = (0..3)
            .flat_map(|i| {
                [1, -1].map(|s| {
                    let mut v = [0; 3];
                    v[i] = s;
                    p(v)
                })
            })
            .collect();
        let m = extract_faces(&pts).unwrap();
        assert_eq!(m.faces.len(), 8);
        assert_eq!(m.edges().len(), 12);
        assert_eq!(m.euler_characteristic(), 2);
        assert!(m.is_closed());
    }

    #[test]
    fn tetrahedron_and_cube() {
        let half = |v: [i64; 3]| v.map(|x| FieldScalar::from_rational(&rat(x, 2)));
        let tetra = [half([1, 1, 1]), half([1, -1, -1]), half([-1, 1, -1]), half([-1, -1, 1])];
        let m = extract_faces(&tetra).unwrap();
        assert_eq!((m.faces.len(), m.edges().len()), (4, 6));
        assert!(m.is_closed());

        let cube: Vec<Point3> = (0..8).map(|b| p([b & 1, b >> 1 & 1, b >> 2 & 1])).collect();
        let m = extract_faces(&cube).unwrap();
        assert_eq!(m.face_census(), vec![(4, 6)]);
        assert!(m.is_closed());
    }

    #[test]
    fn dipyramid_with_irrational_coordinates() {
        let t = FieldScalar::tau();
        let z = FieldScalar::zero;
        let pts = vec![
            [FieldScalar::from_int(2), z(), z()],
            [FieldScalar::from_int(-1), t.clone(), z()],
            [FieldScalar::from_int(-1), -t, z()],
            [z(), z(), FieldScalar::sqrt2()],
            [z(), z(), FieldScalar::from_int(-1)],
        ];
        let m = extract_faces(&pts).unwrap();
        assert_eq!(m.faces.len(), 6);
        assert!(m.faces.iter().all(|f| f.len() == 3));
        assert_eq!(m.euler_characteristic(), 2);
        assert!(m.is_closed());
    }

    #[test]
    fn degenerate_inputs() {
        let square = [p([0, 0, 0]), p([1, 0, 0]), p([0, 1, 0]), p([1, 1, 0])];
        assert_eq!(extract_faces(&square), Err(Error::DegenerateHull { rank: 2 }));
        assert_eq!(extract_faces(&[p([1, 2, 3]), p([1, 2, 3])]), Err(Error::DegenerateHull { rank: 0 }));
        assert_eq!(affine_rank(&[p([0, 0, 0]), p([1, 1, 1]), p([2, 2, 2])]), 1);
    }
}
