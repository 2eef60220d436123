//! Slicing a W(A4) orbit into W(A3) orbits and placing them in 3D.
//!
//! The coset decomposition runs over the powers of the Coxeter element
//! `d = r1 r3 r2 r4`: each `dⁱΛ` seeds one W(A3) orbit. Every slice lies in a
//! hyperplane orthogonal to `c`, so the frame `p0 = c, pᵢ = eᵢ c` separates a
//! common offset from genuine 3D coordinates.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rat, FieldScalar, Rational};
use crate::quaternion::Quaternion;
use crate::representation::{coxeter_group_element, root_data, weight_to_quaternion};
use crate::weyl::{dominant_representative, parabolic_orbit, Weight};

/// Generators of the W(A3) used for slicing.
pub const A3: [usize; 3] = [1, 2, 3];

/// Orthonormal frame `p0 = c, pᵢ = eᵢ p0`.
#[derive(Clone, Debug)]
pub struct PBasis {
    pub p: [Quaternion; 4],
}

impl PBasis {
    pub fn new() -> Self {
        let c = root_data().c.clone();
        let p = std::array::from_fn(|i| if i == 0 { c.clone() } else { &Quaternion::unit(i) * &c });
        PBasis { p }
    }

    /// `xᵢ = (q, pᵢ)`.
    pub fn coordinates(&self, q: &Quaternion) -> [FieldScalar; 4] {
        std::array::from_fn(|i| q.dot(&self.p[i]))
    }

    pub fn from_coordinates(&self, x: &[FieldScalar; 4]) -> Quaternion {
        x.iter().zip(&self.p).fold(Quaternion::zero(), |acc, (xi, pi)| &acc + &pi.scale(xi))
    }
}

impl Default for PBasis {
    fn default() -> Self {
        Self::new()
    }
}

pub fn to_p_coordinates(q: &Quaternion) -> [FieldScalar; 4] {
    PBasis::new().coordinates(q)
}

/// `Λ(i) = dⁱ Λ` for i = 0..5.
pub fn lambda_sequence(w: &Weight) -> [Weight; 5] {
    let d = coxeter_group_element();
    let mut out: [Weight; 5] = std::array::from_fn(|_| w.clone());
    for i in 1..5 {
        out[i] = d.apply(&out[i - 1]);
    }
    out
}

/// `−5 (Λ, ω4)`: the ω4 coefficient of `Λ` in the `(v1, v2, v3, ω4)` basis,
/// times −4.
pub fn charge(w: &Weight) -> Rational {
    -w.dot(&Weight::fundamental(4)) * rat(5, 1)
}

/// Common `p0` coordinate of a slice with the given charge, `charge / (2√5)`.
pub fn p0_offset(charge: &Rational) -> FieldScalar {
    FieldScalar::sqrt5().scale(&(charge / rat(10, 1)))
}

/// One W(A3) orbit inside a W(A4) orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A3OrbitSlice {
    /// Powers `i` of `d` whose `W(A3) dⁱΛ` is this slice.
    pub cosets: Vec<usize>,
    /// Labels `(b1 b2 b3)` of the W(A3)-dominant representative.
    pub a3_labels: [Rational; 3],
    pub charge: Rational,
    /// The dominant representative as a W(A4) weight.
    pub representative: Weight,
    pub weights: Vec<Weight>,
    /// Coordinates on `(p1, p2, p3)`, in the same order as `weights`.
    pub vertices3d: Vec<[FieldScalar; 3]>,
    /// Shared coordinate on `p0`.
    pub offset: FieldScalar,
}

impl A3OrbitSlice {
    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    fn key(&self) -> (&[Rational; 3], &Rational) {
        (&self.a3_labels, &self.charge)
    }
}

fn slice_of(index: usize, seed: &Weight, basis: &PBasis) -> Result<A3OrbitSlice> {
    let (rep, _) = dominant_representative(&A3, seed);
    let charge = charge(&rep);
    let offset = p0_offset(&charge);
    let weights = parabolic_orbit(&A3, &rep);
    let mut vertices3d = Vec::with_capacity(weights.len());
    for v in &weights {
        let [x0, x1, x2, x3] = basis.coordinates(&weight_to_quaternion(v));
        if x0 != offset {
            return Err(Error::Verification(format!("vertex {v} leaves the slice hyperplane")));
        }
        vertices3d.push([x1, x2, x3]);
    }
    let a3_labels = [rep.label(1).clone(), rep.label(2).clone(), rep.label(3).clone()];
    Ok(A3OrbitSlice { cosets: vec![index], a3_labels, charge, representative: rep, weights, vertices3d, offset })
}

/// The five slices `W(A3) dⁱΛ`, one per coset, possibly repeating for
/// weights with vanishing labels.
pub fn coset_slices(w: &Weight) -> Result<Vec<A3OrbitSlice>> {
    let basis = PBasis::new();
    lambda_sequence(w).iter().enumerate().map(|(i, seed)| slice_of(i, seed, &basis)).collect()
}

/// The distinct W(A3) orbits making up `O(Λ)`, by increasing charge. Cosets
/// that land on the same orbit are merged and keep all their indices.
pub fn dominant_slices(w: &Weight) -> Result<Vec<A3OrbitSlice>> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(Box::new(w.clone())));
    }
    let mut merged: Vec<A3OrbitSlice> = Vec::new();
    for slice in coset_slices(w)? {
        match merged.iter_mut().find(|m| m.key() == slice.key()) {
            Some(m) => m.cosets.extend(slice.cosets),
            None => merged.push(slice),
        }
    }
    merged.sort_by(|a, b| a.charge.cmp(&b.charge));
    Ok(merged)
}

/// `α = ½(b1 − b3), β = ½(b1 + b3), γ = ½(b1 + 2b2 + b3)`.
pub fn abg_parameters(b: &[Rational; 3]) -> [Rational; 3] {
    let h = rat(1, 2);
    [(&b[0] - &b[2]) * &h, (&b[0] + &b[2]) * &h, (&b[0] + &b[1] * rat(2, 1) + &b[2]) * &h]
}

/// The closed-form W(A3) orbit of `(b1 b2 b3)` on `(p1, p2, p3)`: the six
/// placements of `(α, β, γ)` with an even number of sign flips.
pub fn abg_points(b: &[Rational; 3]) -> Vec<[Rational; 3]> {
    let [a, be, g] = abg_parameters(b);
    let placements = [[&a, &be, &g], [&be, &g, &a], [&g, &a, &be], [&a, &g, &be], [&g, &be, &a], [&be, &a, &g]];
    let mut out: Vec<[Rational; 3]> = Vec::new();
    for p in placements {
        for signs in [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]] {
            let v: [Rational; 3] = std::array::from_fn(|i| p[i] * rat(signs[i], 1));
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Sum over all slice vertices of `charge`, weighted by vertex count.
pub fn charge_balance(slices: &[A3OrbitSlice]) -> Rational {
    slices.iter().map(|s| &s.charge * rat(s.vertex_count() as i64, 1)).sum()
}

/// Largest absolute charge, used to scale figure output.
pub fn max_abs_charge(slices: &[A3OrbitSlice]) -> Rational {
    slices.iter().map(|s| s.charge.abs()).max().unwrap_or_else(Rational::zero)
}
