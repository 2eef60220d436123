//! Quaternions over Q(√2,√5) and the O(4) actions `[a,b]` and `[a,b]*`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldScalar, Rational, Sign};

/// `q0 + q1 e1 + q2 e2 + q3 e3`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion(pub [FieldScalar; 4]);

impl Quaternion {
    pub fn new(q0: FieldScalar, q1: FieldScalar, q2: FieldScalar, q3: FieldScalar) -> Self {
        Quaternion([q0, q1, q2, q3])
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    /// The basis element 1, e1, e2 or e3.
    pub fn unit(i: usize) -> Self {
        let mut q = Self::zero();
        q.0[i] = FieldScalar::one();
        q
    }

    pub fn from_rationals(c: [Rational; 4]) -> Self {
        Quaternion(c.map(FieldScalar::from))
    }

    pub fn components(&self) -> &[FieldScalar; 4] {
        &self.0
    }

    pub fn conj(&self) -> Self {
        Quaternion([self.0[0].clone(), -&self.0[1], -&self.0[2], -&self.0[3]])
    }

    /// Component-wise Galois conjugate (τ ↔ σ).
    pub fn tilde(&self) -> Self {
        Quaternion(self.0.clone().map(|c| c.galois_conjugate()))
    }

    /// Euclidean scalar product ½(p̄q + q̄p) = Σ pᵢqᵢ.
    pub fn dot(&self, other: &Self) -> FieldScalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// q q̄ = Σ qᵢ².
    pub fn norm_sq(&self) -> FieldScalar {
        self.dot(self)
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldScalar::is_zero)
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        Quaternion(self.0.clone().map(|c| &c * s))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Quaternion(self.0.clone().map(|c| c.scale(r)))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        self.0.clone().map(|c| c.to_f64())
    }

    pub fn structural_cmp(&self, other: &Self) -> Ordering {
        self.0.iter().zip(&other.0).map(|(a, b)| a.structural_cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }

    /// Sign of the first nonzero component.
    pub fn leading_sign(&self) -> Sign {
        self.0.iter().find(|c| !c.is_zero()).map_or(Sign::Zero, FieldScalar::sign)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;

    /// Hamilton product, e_i e_j = −δ_ij + ε_ijk e_k.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion([0, 1, 2, 3].map(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion([0, 1, 2, 3].map(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(self.0.clone().map(|c| -c))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.to_f64();
        write!(f, "Quaternion({a:.6}, {b:.6}, {c:.6}, {d:.6})")
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}; {}; {}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// An element of O(4): `[a,b] : q ↦ a q b` or `[a,b]* : q ↦ a q̄ b`.
///
/// `[a,b]` and `[−a,−b]` are the same map; [`OrthogonalAction::new`]
/// canonicalizes so that the first nonzero component of `a` is positive,
/// which makes structural equality coincide with equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrthogonalAction {
    left: Quaternion,
    right: Quaternion,
    starred: bool,
}

impl OrthogonalAction {
    pub fn new(left: Quaternion, right: Quaternion, starred: bool) -> Self {
        debug_assert!(!left.is_zero() && !right.is_zero());
        if left.leading_sign() == Sign::Negative {
            OrthogonalAction { left: -left, right: -right, starred }
        } else {
            OrthogonalAction { left, right, starred }
        }
    }

    pub fn identity() -> Self {
        Self::new(Quaternion::one(), Quaternion::one(), false)
    }

    /// The reflection in the hyperplane orthogonal to the unit quaternion `root`,
    /// `[root, −root]*`.
    pub fn reflection(root: &Quaternion) -> Self {
        Self::new(root.clone(), -root, true)
    }

    pub fn left(&self) -> &Quaternion {
        &self.left
    }

    pub fn right(&self) -> &Quaternion {
        &self.right
    }

    pub fn is_starred(&self) -> bool {
        self.starred
    }

    pub fn apply(&self, q: &Quaternion) -> Quaternion {
        if self.starred {
            &(&self.left * &q.conj()) * &self.right
        } else {
            &(&self.left * q) * &self.right
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (&self.left, &self.right);
        let (c, d) = (&other.left, &other.right);
        match (self.starred, other.starred) {
            (false, false) => Self::new(a * c, d * b, false),
            (false, true) => Self::new(a * c, d * b, true),
            (true, false) => Self::new(a * &d.conj(), &c.conj() * b, true),
            (true, true) => Self::new(a * &d.conj(), &c.conj() * b, false),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.starred {
            // q = a p̄ b  ⇒  p = b q̄ a (for unit a, b)
            Self::new(self.right.clone(), self.left.clone(), true)
        } else {
            Self::new(self.left.conj(), self.right.conj(), false)
        }
    }

    pub fn power(&self, n: usize) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Images of 1, e1, e2, e3 as matrix columns (floats, for display).
    pub fn to_f64_matrix(&self) -> [[f64; 4]; 4] {
        let cols: Vec<[f64; 4]> = (0..4).map(|j| self.apply(&Quaternion::unit(j)).to_f64()).collect();
        let mut m = [[0.0; 4]; 4];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..4 {
                m[i][j] = col[i];
            }
        }
        m
    }
}

impl fmt::Debug for OrthogonalAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]{}", self.left, self.right, if self.starred { "*" } else { "" })
    }
}
