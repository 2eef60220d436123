//! The finite quaternion sets T, T′, O, S, I (and Ĩ).
//!
//! T is the binary tetrahedral group, T′ the other half of the 24-cell pair,
//! O = T ⊕ T′ the binary octahedral group, S the 96 vertices of the snub
//! 24-cell and I = T ⊕ S the binary icosahedral group (vertices of the
//! 600-cell). Ĩ is I under τ ↔ σ.

use std::fmt;
use std::str::FromStr;

use crate::field::{rat, FieldScalar};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetName {
    T,
    TPrime,
    O,
    S,
    I,
    ITilde,
}

impl SetName {
    pub const ALL: [SetName; 6] = [SetName::T, SetName::TPrime, SetName::O, SetName::S, SetName::I, SetName::ITilde];

    pub fn as_str(self) -> &'static str {
        match self {
            SetName::T => "T",
            SetName::TPrime => "Tprime",
            SetName::O => "O",
            SetName::S => "S",
            SetName::I => "I",
            SetName::ITilde => "Itilde",
        }
    }
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SetName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SetName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown quaternion set {s:?} (expected T, Tprime, O, S, I, Itilde)"))
    }
}

/// A finite set of quaternions kept sorted by the structural order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionSet {
    pub name: Option<SetName>,
    elements: Vec<Quaternion>,
}

impl QuaternionSet {
    pub fn from_elements(name: Option<SetName>, elements: impl IntoIterator<Item = Quaternion>) -> Self {
        let mut elements: Vec<Quaternion> = elements.into_iter().collect();
        elements.sort_by(Quaternion::structural_cmp);
        elements.dedup();
        QuaternionSet { name, elements }
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, q: &Quaternion) -> bool {
        self.elements.binary_search_by(|e| e.structural_cmp(q)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Quaternion> {
        self.elements.iter()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_elements(None, self.elements.iter().chain(&other.elements).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_elements(None, self.elements.iter().filter(|q| other.contains(q)).cloned())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.elements.iter().all(|q| !other.contains(q))
    }

    pub fn tilde(&self) -> Self {
        Self::from_elements(None, self.elements.iter().map(Quaternion::tilde))
    }
}

/// Every sign assignment of the nonzero entries of `pattern`.
fn signed_expansions(pattern: &[FieldScalar; 4]) -> Vec<Quaternion> {
    let nonzero: Vec<usize> = (0..4).filter(|&i| !pattern[i].is_zero()).collect();
    (0..1u32 << nonzero.len())
        .map(|mask| {
            let mut q = Quaternion(pattern.clone());
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    q.0[i] = -&q.0[i];
                }
            }
            q
        })
        .collect()
}

/// Coefficient patterns (on 1, e1, e2, e3, before the overall ½) of the
/// twelve families making up S. Each family is ½(±x ± y ± z) with one slot
/// empty; the slot assignments follow a cyclic pattern over (e1, e2, e3).
pub fn snub_families() -> Vec<[FieldScalar; 4]> {
    #[derive(Clone, Copy)]
    enum C {
        Tau,
        Sigma,
        One,
        Zero,
    }
    let val = |c: C| match c {
        C::Tau => FieldScalar::tau(),
        C::Sigma => FieldScalar::sigma(),
        C::One => FieldScalar::one(),
        C::Zero => FieldScalar::zero(),
    };
    // (scalar part, coefficient on e_k, coefficient on e_{k+1}, coefficient on e_{k+2});
    // each template is rotated over k = 1, 2, 3.
    let templates: [[C; 4]; 4] = [
        // ½(±τ ± e_k ± σ e_{k+2})
        [C::Tau, C::One, C::Zero, C::Sigma],
        // ½(±σ ± e_k ± τ e_{k+1})
        [C::Sigma, C::One, C::Tau, C::Zero],
        // ½(±1 ± τ e_k ± σ e_{k+1})
        [C::One, C::Tau, C::Sigma, C::Zero],
        // ½(± σ e_k ± τ e_{k+1} ± e_{k+2})
        [C::Zero, C::Sigma, C::Tau, C::One],
    ];
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(12);
    for t in &templates {
        for k in 0..3 {
            let mut q = [FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero()];
            q[0] = val(t[0]).scale(&half);
            for j in 0..3 {
                q[1 + (k + j) % 3] = val(t[1 + j]).scale(&half);
            }
            out.push(q);
        }
    }
    out
}

fn rational_pattern(p: [i64; 4], den: i64) -> [FieldScalar; 4] {
    p.map(|x| FieldScalar::from_rational(&rat(x, den)))
}

fn tetrahedral() -> Vec<Quaternion> {
    let mut v = Vec::new();
    for i in 0..4 {
        let mut p = [0; 4];
        p[i] = 1;
        v.extend(signed_expansions(&rational_pattern(p, 1)));
    }
    v.extend(signed_expansions(&rational_pattern([1, 1, 1, 1], 2)));
    v
}

fn tetrahedral_prime() -> Vec<Quaternion> {
    let r = FieldScalar::sqrt2().inverse().expect("√2 ≠ 0");
    let mut v = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut p = [FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero()];
            p[i] = r.clone();
            p[j] = r.clone();
            v.extend(signed_expansions(&p));
        }
    }
    v
}

fn snub() -> Vec<Quaternion> {
    snub_families().iter().flat_map(signed_expansions).collect()
}

pub fn build_set(name: SetName) -> QuaternionSet {
    let elements = match name {
        SetName::T => tetrahedral(),
        SetName::TPrime => tetrahedral_prime(),
        SetName::O => tetrahedral().into_iter().chain(tetrahedral_prime()).collect(),
        SetName::S => snub(),
        SetName::I => tetrahedral().into_iter().chain(snub()).collect(),
        SetName::ITilde => tetrahedral().into_iter().chain(snub()).map(|q| q.tilde()).collect(),
    };
    QuaternionSet::from_elements(Some(name), elements)
}

/// Result of checking the group axioms on a quaternion set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupReport {
    pub size: usize,
    pub all_unit: bool,
    pub has_identity: bool,
    pub has_inverses: bool,
    /// First pair whose product leaves the set.
    pub closure_counterexample: Option<(Quaternion, Quaternion)>,
}

impl GroupReport {
    pub fn is_group(&self) -> bool {
        self.all_unit && self.has_identity && self.has_inverses && self.closure_counterexample.is_none()
    }
}

pub fn verify_group(set: &QuaternionSet) -> GroupReport {
    let els = set.elements();
    let closure_counterexample =
        els.iter().find_map(|p| els.iter().find(|q| !set.contains(&(p * *q))).map(|q| (p.clone(), q.clone())));
    GroupReport {
        size: els.len(),
        all_unit: els.iter().all(Quaternion::is_unit),
        has_identity: set.contains(&Quaternion::one()),
        has_inverses: els.iter().all(|q| set.contains(&q.conj())),
        closure_counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_q(c: [FieldScalar; 4]) -> Quaternion {
        Quaternion(c.map(|x| x.scale(&rat(1, 2))))
    }

    #[test]
    fn sizes() {
        let expect = [
            (SetName::T, 24),
            (SetName::TPrime, 24),
            (SetName::O, 48),
            (SetName::S, 96),
            (SetName::I, 120),
            (SetName::ITilde, 120),
        ];
        for (name, n) in expect {
            assert_eq!(build_set(name).len(), n, "{name}");
        }
    }

    #[test]
    fn snub_by_brute_force() {
        // Oracle: every coordinate triple from the hand-written families, all 8 signs,
        // deduplicated in a plain Vec.
        let mut all: Vec<Quaternion> = Vec::new();
        for fam in snub_families() {
            for q in signed_expansions(&fam) {
                if !all.contains(&q) {
                    all.push(q);
                }
            }
        }
        assert_eq!(all.len(), 96);
        assert!(all.iter().all(Quaternion::is_unit));
    }

    #[test]
    fn hand_typed_snub_elements() {
        let (t, s, o, z) = (FieldScalar::tau(), FieldScalar::sigma(), FieldScalar::one(), FieldScalar::zero());
        let set = build_set(SetName::S);
        let spots = [
            // ½(τ + e1 + σ e3)
            [t.clone(), o.clone(), z.clone(), s.clone()],
            // ½(τ + σ e1 + e2)
            [t.clone(), s.clone(), o.clone(), z.clone()],
            // ½(−σ + e3 + τ e1)
            [-&s, t.clone(), z.clone(), o.clone()],
            // ½(1 − τ e2 + σ e3)
            [o.clone(), z.clone(), -&t, s.clone()],
            // ½(σ e3 + τ e1 − e2)
            [z.clone(), t.clone(), -&o, s.clone()],
            // ½(−σ e2 + τ e3 + e1)
            [z.clone(), o.clone(), -&s, t.clone()],
        ];
        for c in spots {
            assert!(set.contains(&half_q(c.clone())), "{:?}", half_q(c));
        }
        // τ in the e1 slot next to a scalar τ is not an element.
        assert!(!set.contains(&half_q([t.clone(), t.clone(), z.clone(), s.clone()])));
    }

    #[test]
    fn groups_and_cosets() {
        for name in [SetName::T, SetName::O, SetName::I, SetName::ITilde] {
            let rep = verify_group(&build_set(name));
            assert!(rep.is_group(), "{name}: {rep:?}");
        }
        let tp = verify_group(&build_set(SetName::TPrime));
        assert!(tp.closure_counterexample.is_some());
        assert!(!tp.has_identity);
        let s = verify_group(&build_set(SetName::S));
        assert!(s.closure_counterexample.is_some());

        let t = build_set(SetName::T);
        let i = build_set(SetName::I);
        assert!(t.is_disjoint(&build_set(SetName::S)));
        assert_eq!(t.union(&build_set(SetName::S)).elements(), i.elements());
        assert_eq!(t.union(&build_set(SetName::TPrime)).elements(), build_set(SetName::O).elements());
    }

    #[test]
    fn trivial_group() {
        let one = QuaternionSet::from_elements(None, [Quaternion::one()]);
        assert!(verify_group(&one).is_group());
    }

    #[test]
    fn icosians_meet_their_conjugates_in_t() {
        let i = build_set(SetName::I);
        let it = build_set(SetName::ITilde);
        assert_eq!(i.intersection(&it).elements(), build_set(SetName::T).elements());
        assert_eq!(i.tilde().elements(), it.elements());
    }

    #[test]
    fn c_lies_in_t_prime() {
        let r = FieldScalar::sqrt2().inverse().unwrap();
        let c = Quaternion::new(FieldScalar::zero(), FieldScalar::zero(), -&r, r);
        assert!(build_set(SetName::TPrime).contains(&c));
    }

    #[test]
    fn each_snub_element_in_exactly_one_family() {
        let fams: Vec<Vec<Quaternion>> = snub_families().iter().map(signed_expansions).collect();
        for q in build_set(SetName::S).iter() {
            assert_eq!(fams.iter().filter(|f| f.contains(q)).count(), 1);
        }
    }
}
