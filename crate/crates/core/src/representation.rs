//! The quaternionic realization of W(A4).
//!
//! Roots and fundamental weights are fixed unit-scale quaternions. The group
//! is built from the binary icosahedral group as pairs `[p, ±c̄ p̃̄ c]`, and
//! every action is matched against the Dynkin-label engine through its
//! integer matrix on the ω basis.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::binary::{build_set, SetName};
use crate::error::{Error, Result};
use crate::field::{rat, FieldScalar, Rational};
use crate::quaternion::{OrthogonalAction, Quaternion};
use crate::weyl::{self, generate_group, GroupElement, IntMatrix, Weight, WeylGroup, RANK};

/// Simple roots, the affine root, fundamental weights and `c = (e3 − e2)/√2`.
#[derive(Clone, Debug)]
pub struct RootData {
    pub alpha: [Quaternion; RANK],
    pub alpha0: Quaternion,
    pub omega: [Quaternion; RANK],
    pub c: Quaternion,
}

fn half(x: FieldScalar) -> FieldScalar {
    x.scale(&rat(1, 2))
}

impl RootData {
    pub fn new() -> Self {
        let one = FieldScalar::one;
        let zero = FieldScalar::zero;
        let (tau, sigma) = (FieldScalar::tau(), FieldScalar::sigma());
        let alpha = [
            Quaternion::new(-one(), zero(), zero(), zero()),
            Quaternion::new(half(one()), half(one()), half(one()), half(one())),
            Quaternion::new(zero(), -one(), zero(), zero()),
            Quaternion::new(zero(), half(one()), half(-&sigma), half(-&tau)),
        ];
        let alpha0 = Quaternion::new(half(one()), zero(), half(-&tau), half(-&sigma));
        let inv_sqrt10 = FieldScalar::sqrt10().scale(&rat(1, 10));
        let w = |q: [FieldScalar; 4]| Quaternion(q).scale(&inv_sqrt10);
        let two = FieldScalar::from_int(2);
        let omega = [
            w([-FieldScalar::sqrt5(), zero(), tau.clone(), -&sigma]),
            w([zero(), zero(), &two * &tau, -(&two * &sigma)]),
            w([zero(), -FieldScalar::sqrt5(), &tau * &tau, -(&sigma * &sigma)]),
            w([zero(), zero(), two.clone(), -two]),
        ];
        let inv_sqrt2 = FieldScalar::sqrt2().scale(&rat(1, 2));
        let c = Quaternion::new(zero(), zero(), -&inv_sqrt2, inv_sqrt2);
        RootData { alpha, alpha0, omega, c }
    }

    /// `√2 αᵢ`, the root normalized to length √2 (i in 1..=4).
    pub fn scaled_root(&self, i: usize) -> Quaternion {
        self.alpha[i - 1].scale(&FieldScalar::sqrt2())
    }

    /// Generator `rᵢ = [αᵢ, −αᵢ]*` (i in 1..=4).
    pub fn generator(&self, i: usize) -> Result<OrthogonalAction> {
        if !(1..=RANK).contains(&i) {
            return Err(Error::InvalidGenerator(i));
        }
        Ok(OrthogonalAction::reflection(&self.alpha[i - 1]))
    }

    /// The partner `c̄ p̃̄ c` of `p` in the W(A4) pairs.
    pub fn partner(&self, p: &Quaternion) -> Quaternion {
        &(&self.c.conj() * &p.tilde().conj()) * &self.c
    }
}

impl Default for RootData {
    fn default() -> Self {
        Self::new()
    }
}

/// Shared root data.
pub fn root_data() -> &'static RootData {
    static DATA: OnceLock<RootData> = OnceLock::new();
    DATA.get_or_init(RootData::new)
}

/// `Σ aᵢ ωᵢ`.
pub fn weight_to_quaternion(w: &Weight) -> Quaternion {
    let data = root_data();
    w.labels()
        .iter()
        .zip(&data.omega)
        .filter(|(a, _)| !a.is_zero())
        .fold(Quaternion::zero(), |acc, (a, om)| &acc + &om.scale_rational(a))
}

/// Dynkin labels `aⱼ = (√2 αⱼ, q)`, or `None` if `q` is not in the rational
/// span of the ω basis.
pub fn quaternion_to_weight(q: &Quaternion) -> Option<Weight> {
    let data = root_data();
    let mut labels: [Rational; RANK] = std::array::from_fn(|_| Rational::zero());
    for (j, label) in labels.iter_mut().enumerate() {
        *label = data.scaled_root(j + 1).dot(q).to_rational()?;
    }
    let w = Weight::new(labels);
    (weight_to_quaternion(&w) == *q).then_some(w)
}

/// Integer matrix of an action on Dynkin labels, or `None` if the action
/// does not preserve the weight lattice.
pub fn action_matrix(g: &OrthogonalAction) -> Option<IntMatrix> {
    let data = root_data();
    let mut m = [[0i64; RANK]; RANK];
    for (j, om) in data.omega.iter().enumerate() {
        let image = quaternion_to_weight(&g.apply(om))?;
        for (i, a) in image.labels().iter().enumerate() {
            if !a.is_integer() {
                return None;
            }
            m[i][j] = i64::try_from(a.to_integer()).ok()?;
        }
    }
    Some(IntMatrix(m))
}

/// Quaternionic action of a Dynkin-label group element via its word.
pub fn element_action(g: &GroupElement) -> OrthogonalAction {
    let data = root_data();
    g.word().iter().fold(OrthogonalAction::identity(), |acc, &i| {
        acc.compose(&data.generator(i as usize).expect("word letters are 1..=4"))
    })
}

fn dedup_actions(actions: impl IntoIterator<Item = OrthogonalAction>) -> Vec<OrthogonalAction> {
    let mut seen = HashSet::new();
    actions.into_iter().filter(|g| seen.insert(g.clone())).collect()
}

/// `{[p, c̄ p̃̄ c] ⊕ [p, −c̄ p̃̄ c]*}` over `p` in the binary icosahedral group,
/// after identifying `[a, b]` with `[−a, −b]`: 60 rotations and 60 reflections.
pub fn build_w_a4() -> Vec<OrthogonalAction> {
    let data = root_data();
    let i_set = build_set(SetName::I);
    dedup_actions(i_set.iter().flat_map(|p| {
        let b = data.partner(p);
        [OrthogonalAction::new(p.clone(), b.clone(), false), OrthogonalAction::new(p.clone(), -b, true)]
    }))
}

/// The extension by the diagram symmetry: all four sign and star choices,
/// 240 actions.
pub fn build_aut_a4() -> Vec<OrthogonalAction> {
    let data = root_data();
    let i_set = build_set(SetName::I);
    dedup_actions(i_set.iter().flat_map(|p| {
        let b = data.partner(p);
        [
            OrthogonalAction::new(p.clone(), b.clone(), false),
            OrthogonalAction::new(p.clone(), -&b, true),
            OrthogonalAction::new(p.clone(), -&b, false),
            OrthogonalAction::new(p.clone(), b, true),
        ]
    }))
}

/// W(A3) = ⟨r1, r2, r3⟩ as `{[t, c̄ t̃̄ c] ⊕ [t, −c̄ t̃̄ c]*}` over the binary
/// tetrahedral group.
pub fn build_w_a3() -> Vec<OrthogonalAction> {
    let data = root_data();
    dedup_actions(build_set(SetName::T).iter().flat_map(|t| {
        let b = data.partner(t);
        [OrthogonalAction::new(t.clone(), b.clone(), false), OrthogonalAction::new(t.clone(), -b, true)]
    }))
}

/// Outcome of matching the quaternionic group against the Dynkin-label one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationReport {
    pub weyl_order: usize,
    pub action_count: usize,
    pub rotations: usize,
    pub reflections: usize,
    /// Every action lands on a distinct Weyl matrix and all 120 are hit.
    pub bijective: bool,
    /// `φ(g ∘ rᵢ) = φ(g) ∘ φ(rᵢ)` for every action and generator.
    pub homomorphism: bool,
    /// `rᵢ = [αᵢ, −αᵢ]*` matches the Dynkin reflection matrix.
    pub generators_match: bool,
    /// Quaternionic orbits of the checked weights equal the images of the
    /// Dynkin-label orbits.
    pub orbits_match: bool,
    pub first_mismatch: Option<String>,
}

impl RepresentationReport {
    pub fn is_ok(&self) -> bool {
        self.weyl_order == weyl::GROUP_ORDER
            && self.action_count == weyl::GROUP_ORDER
            && self.bijective
            && self.homomorphism
            && self.generators_match
            && self.orbits_match
    }
}

/// Weights whose orbits are compared pointwise in [`verify_representation`].
const CHECKED_WEIGHTS: [[i64; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [1, 0, 0, 1], [1, 1, 1, 1]];

pub fn verify_representation() -> RepresentationReport {
    verify_against(&generate_group(), &build_w_a4())
}

pub fn verify_against(group: &WeylGroup, actions: &[OrthogonalAction]) -> RepresentationReport {
    let data = root_data();
    let mut first_mismatch = None;
    let mut note = |msg: String| {
        if first_mismatch.is_none() {
            first_mismatch = Some(msg);
        }
    };

    let mut hit = BTreeSet::new();
    let mut bijective = true;
    for g in actions {
        match action_matrix(g).filter(|m| group.find(m).is_some()) {
            Some(m) => {
                if !hit.insert(m) {
                    bijective = false;
                    note(format!("two actions share the matrix {m:?}"));
                }
            }
            None => {
                bijective = false;
                note(format!("action {g:?} is not in the Dynkin-label group"));
            }
        }
    }
    bijective &= hit.len() == group.len();

    let mut generators_match = true;
    let gens: Vec<OrthogonalAction> = (1..=RANK).map(|i| data.generator(i).expect("in range")).collect();
    for (i, r) in gens.iter().enumerate() {
        if action_matrix(r) != Some(IntMatrix::reflection(i + 1)) {
            generators_match = false;
            note(format!("generator r{} disagrees with its reflection matrix", i + 1));
        }
    }

    let mut homomorphism = true;
    'outer: for g in actions {
        let Some(mg) = action_matrix(g) else {
            homomorphism = false;
            break;
        };
        for (i, r) in gens.iter().enumerate() {
            if action_matrix(&g.compose(r)) != Some(mg * IntMatrix::reflection(i + 1)) {
                homomorphism = false;
                note(format!("composition with r{} breaks the homomorphism at {g:?}", i + 1));
                break 'outer;
            }
        }
    }

    let mut orbits_match = true;
    for labels in CHECKED_WEIGHTS {
        let w = Weight::from_ints(labels);
        let expected: HashSet<Quaternion> = weyl::orbit(&w).iter().map(weight_to_quaternion).collect();
        let q = weight_to_quaternion(&w);
        let got: HashSet<Quaternion> = actions.iter().map(|g| g.apply(&q)).collect();
        if got != expected {
            orbits_match = false;
            note(format!("orbit of {w} differs between the two realizations"));
        }
    }

    RepresentationReport {
        weyl_order: group.len(),
        action_count: actions.len(),
        rotations: actions.iter().filter(|g| !g.is_starred()).count(),
        reflections: actions.iter().filter(|g| g.is_starred()).count(),
        bijective,
        homomorphism,
        generators_match,
        orbits_match,
        first_mismatch,
    }
}

/// `α = ½(−σ + e2 + τe3)`.
pub fn coxeter_alpha() -> Quaternion {
    Quaternion::new(
        half(-FieldScalar::sigma()),
        FieldScalar::zero(),
        half(FieldScalar::one()),
        half(FieldScalar::tau()),
    )
}

/// `β = ½(−τ + σe2 + e3)`.
pub fn coxeter_beta() -> Quaternion {
    Quaternion::new(
        half(-FieldScalar::tau()),
        FieldScalar::zero(),
        half(FieldScalar::sigma()),
        half(FieldScalar::one()),
    )
}

/// `d = R1 R2` with `R1 = r1 r3`, `R2 = r2 r4`.
pub fn coxeter_element() -> OrthogonalAction {
    let data = root_data();
    [1, 3, 2, 4].iter().fold(OrthogonalAction::identity(), |acc, &i| acc.compose(&data.generator(i).expect("in range")))
}

/// Dynkin-label form of the Coxeter element.
pub fn coxeter_group_element() -> GroupElement {
    GroupElement::from_word(&[1, 3, 2, 4]).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{dynkin_flip, parabolic, CARTAN};

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn root_products() {
        let d = root_data();
        for i in 0..RANK {
            assert!(d.alpha[i].is_unit());
            for j in 0..RANK {
                assert_eq!(d.alpha[i].dot(&d.alpha[j]), FieldScalar::from_rational(&rat(CARTAN[i][j], 2)));
                let delta = FieldScalar::from_int((i == j) as i64);
                assert_eq!(d.scaled_root(i + 1).dot(&d.omega[j]), delta);
                assert_eq!(d.omega[i].dot(&d.omega[j]), FieldScalar::from_rational(&weyl::cartan_inverse()[i][j]));
            }
        }
        assert_eq!(d.alpha0, -d.alpha.iter().fold(Quaternion::zero(), |a, b| &a + b));
        assert_eq!(d.alpha[0].dot(&d.alpha[1]), FieldScalar::from_rational(&rat(-1, 2)));
    }

    #[test]
    fn omega4_is_multiple_of_c() {
        let d = root_data();
        let k = FieldScalar::sqrt5().scale(&rat(-2, 5));
        assert_eq!(d.omega[3], d.c.scale(&k));
        for i in 0..3 {
            assert!(d.alpha[i].dot(&d.c).is_zero());
        }
    }

    #[test]
    fn weight_round_trip() {
        let w = Weight::new([rat(1, 2), rat(-3, 1), rat(0, 1), rat(7, 3)]);
        let q = weight_to_quaternion(&w);
        assert_eq!(quaternion_to_weight(&q), Some(w.clone()));
        assert_eq!(weight_to_quaternion(&Weight::zero()), Quaternion::zero());
        let w1 = weight_to_quaternion(&Weight::fundamental(1));
        assert_eq!(w1.norm_sq(), FieldScalar::from_rational(&rat(4, 5)));
        assert_eq!(quaternion_to_weight(&Quaternion::unit(0)), None);
        let u = Weight::from_ints([2, -1, 3, 1]);
        assert_eq!(weight_to_quaternion(&w).dot(&weight_to_quaternion(&u)), FieldScalar::from_rational(&w.dot(&u)));
    }

    #[test]
    fn group_size_and_members() {
        let g = build_w_a4();
        assert_eq!(g.len(), 120);
        assert_eq!(g.iter().filter(|a| a.is_starred()).count(), 60);
        assert!(g.contains(&OrthogonalAction::identity()));
        let d = root_data();
        for i in 1..=4 {
            assert!(g.contains(&d.generator(i).unwrap()));
        }
        assert!(d.generator(0).is_err());
        assert_eq!(build_aut_a4().len(), 240);
    }

    #[test]
    fn representation_is_faithful() {
        let report = verify_representation();
        assert!(report.is_ok(), "{report:?}");
        assert_eq!((report.rotations, report.reflections), (60, 60));
    }

    #[test]
    fn generator_images_match_reflect() {
        let d = root_data();
        let r1 = d.generator(1).unwrap();
        let image = r1.apply(&weight_to_quaternion(&Weight::fundamental(1)));
        let expected = weyl::reflect(1, &Weight::fundamental(1)).unwrap();
        assert_eq!(quaternion_to_weight(&image), Some(expected));
        for e in generate_group().elements() {
            assert_eq!(action_matrix(&element_action(e)).as_ref(), Some(e.matrix()));
        }
    }

    #[test]
    fn five_cell_orbit() {
        let g = build_w_a4();
        let w1 = weight_to_quaternion(&Weight::fundamental(1));
        let orbit: HashSet<Quaternion> = g.iter().map(|a| a.apply(&w1)).collect();
        let om = &root_data().omega;
        let expected: HashSet<Quaternion> =
            [om[0].clone(), &om[1] - &om[0], &om[2] - &om[1], &om[3] - &om[2], -&om[3]].into();
        assert_eq!(orbit, expected);
    }

    #[test]
    fn permutation_action_on_five_cell() {
        let g = build_w_a4();
        let pts: Vec<Quaternion> = weyl::orbit(&Weight::fundamental(1)).iter().map(weight_to_quaternion).collect();
        let perms: HashSet<Vec<usize>> = g
            .iter()
            .map(|a| {
                pts.iter().map(|p| pts.iter().position(|x| *x == a.apply(p)).expect("orbit is preserved")).collect()
            })
            .collect();
        assert_eq!(perms.len(), 120);
    }

    #[test]
    fn tetrahedral_subgroup_fixes_c() {
        let d = root_data();
        let a3 = build_w_a3();
        assert_eq!(a3.len(), 24);
        let from_words: HashSet<OrthogonalAction> =
            parabolic(&[1, 2, 3]).unwrap().elements().iter().map(element_action).collect();
        assert_eq!(a3.iter().cloned().collect::<HashSet<_>>(), from_words);
        for g in &a3 {
            assert_eq!(g.apply(&d.c), d.c);
        }
    }

    #[test]
    fn extension_negates_orbits() {
        let w_a4: HashSet<OrthogonalAction> = build_w_a4().into_iter().collect();
        let extra: Vec<OrthogonalAction> = build_aut_a4().into_iter().filter(|g| !w_a4.contains(g)).collect();
        assert_eq!(extra.len(), 120);
        for labels in [[1, 0, 0, 0], [1, 1, 0, 1], [0, 1, 1, 0]] {
            let w = Weight::from_ints(labels);
            let flipped: HashSet<Quaternion> = weyl::orbit(&dynkin_flip(&w)).iter().map(weight_to_quaternion).collect();
            let negated: HashSet<Quaternion> = weyl::orbit(&w).iter().map(|v| -weight_to_quaternion(v)).collect();
            assert_eq!(flipped, negated);
            let q = weight_to_quaternion(&w);
            let images: HashSet<Quaternion> = extra.iter().map(|g| g.apply(&q)).collect();
            assert_eq!(images, flipped);
        }
    }

    #[test]
    fn coxeter_element_pair() {
        let d = coxeter_element();
        assert!(!d.is_identity());
        assert!(!d.power(2).is_identity());
        assert!(d.power(5).is_identity());
        assert_eq!(d, OrthogonalAction::new(coxeter_alpha(), coxeter_beta(), false));
        let c = &root_data().c;
        let b = &(&c.conj() * &coxeter_alpha().conj()) * c;
        assert_eq!(b.tilde(), coxeter_beta());
        assert_eq!(action_matrix(&d).as_ref(), Some(coxeter_group_element().matrix()));
    }
}
