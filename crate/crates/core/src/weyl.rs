//! W(A4) as a reflection group on Dynkin labels.
//!
//! Everything here is rational: a weight is `Λ = Σ aᵢ ωᵢ` stored by its
//! labels, the simple reflections act by `(rᵢΛ)_j = a_j − aᵢ C_ij`, and scalar
//! products go through the inverse Cartan matrix. The quaternionic embedding
//! lives in [`crate::representation`].

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{rat, Rational};

pub const RANK: usize = 4;

/// Order of W(A4) ≅ S5.
pub const GROUP_ORDER: usize = 120;

/// Cartan matrix of A4, `(αᵢ, αⱼ) = ½ Cᵢⱼ` for the unit-normalized roots.
pub const CARTAN: [[i64; RANK]; RANK] = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]];

/// `C⁻¹ = (ωᵢ, ωⱼ)`, entries over the common denominator 5.
pub const CARTAN_INV_NUMER: [[i64; RANK]; RANK] = [[4, 3, 2, 1], [3, 6, 4, 2], [2, 4, 6, 3], [1, 2, 3, 4]];

pub fn cartan_inverse() -> [[Rational; RANK]; RANK] {
    CARTAN_INV_NUMER.map(|row| row.map(|x| rat(x, 5)))
}

/// Cartan matrix with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub c: [[i64; RANK]; RANK],
    pub cinv: [[Rational; RANK]; RANK],
}

impl CartanData {
    pub fn a4() -> Self {
        CartanData { c: CARTAN, cinv: cartan_inverse() }
    }

    /// `C · C⁻¹ = 1`.
    pub fn is_consistent(&self) -> bool {
        (0..RANK).all(|i| {
            (0..RANK).all(|j| {
                let s: Rational = (0..RANK).map(|k| rat(self.c[i][k], 1) * &self.cinv[k][j]).sum();
                s == rat((i == j) as i64, 1)
            })
        })
    }
}

/// A weight `a1 ω1 + a2 ω2 + a3 ω3 + a4 ω4` by its Dynkin labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub [Rational; RANK]);

impl Weight {
    pub fn new(labels: [Rational; RANK]) -> Self {
        Weight(labels)
    }

    pub fn from_ints(labels: [i64; RANK]) -> Self {
        Weight(labels.map(|a| rat(a, 1)))
    }

    pub fn zero() -> Self {
        Self::from_ints([0; RANK])
    }

    /// The k-th fundamental weight ωₖ (k in 1..=4).
    pub fn fundamental(k: usize) -> Self {
        let mut w = Self::zero();
        w.0[k - 1] = rat(1, 1);
        w
    }

    /// Label aᵢ (i in 1..=4).
    pub fn label(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn labels(&self) -> &[Rational; RANK] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|a| !a.is_negative())
    }

    /// All labels 0 or 1.
    pub fn is_uniform_pattern(&self) -> bool {
        self.0.iter().all(|a| a.is_zero() || *a == rat(1, 1))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Weight(self.0.clone().map(|a| a * r))
    }

    /// `(Λ, Λ′) = Λᵀ C⁻¹ Λ′`.
    pub fn dot(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for (a, row) in self.0.iter().zip(&CARTAN_INV_NUMER) {
            if a.is_zero() {
                continue;
            }
            for (b, &m) in other.0.iter().zip(row) {
                if m != 0 && !b.is_zero() {
                    acc += a * b * rat(m, 1);
                }
            }
        }
        acc / rat(5, 1)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn to_f64(&self) -> [f64; RANK] {
        use num_traits::ToPrimitive;
        self.0.clone().map(|a| a.to_f64().unwrap_or(f64::NAN))
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight([0, 1, 2, 3].map(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight([0, 1, 2, 3].map(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.clone().map(|a| -a))
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {} {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// The diagram automorphism (a1 a2 a3 a4) ↦ (a4 a3 a2 a1).
pub fn dynkin_flip(w: &Weight) -> Weight {
    let [a1, a2, a3, a4] = w.0.clone();
    Weight([a4, a3, a2, a1])
}

/// Integer 4×4 matrix acting on Dynkin-label column vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntMatrix(pub [[i64; RANK]; RANK]);

impl IntMatrix {
    pub fn identity() -> Self {
        let mut m = [[0; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        IntMatrix(m)
    }

    /// Matrix of the simple reflection rᵢ (i in 1..=4).
    pub fn reflection(i: usize) -> Self {
        let mut m = Self::identity().0;
        let c = i - 1;
        for (j, row) in m.iter_mut().enumerate() {
            row[c] -= CARTAN[c][j];
        }
        IntMatrix(m)
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(std::array::from_fn(|i| {
            let mut acc = Rational::zero();
            for j in 0..RANK {
                let m = self.0[i][j];
                if m != 0 && !w.0[j].is_zero() {
                    acc += &w.0[j] * rat(m, 1);
                }
            }
            acc
        }))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc * *self)
    }

    pub fn transpose(&self) -> Self {
        IntMatrix(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i])))
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: IntMatrix) -> IntMatrix {
        IntMatrix(std::array::from_fn(|i| std::array::from_fn(|j| (0..RANK).map(|k| self.0[i][k] * rhs.0[k][j]).sum())))
    }
}

/// A group element with a word witness: `word = [i1, …, in]` is `r_{i1} ∘ … ∘ r_{in}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    word: Vec<u8>,
    matrix: IntMatrix,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { word: Vec::new(), matrix: IntMatrix::identity() }
    }

    pub fn generator(i: usize) -> Result<Self> {
        if !(1..=RANK).contains(&i) {
            return Err(Error::InvalidGenerator(i));
        }
        Ok(GroupElement { word: vec![i as u8], matrix: IntMatrix::reflection(i) })
    }

    pub fn from_word(word: &[usize]) -> Result<Self> {
        word.iter().try_fold(Self::identity(), |acc, &i| Ok(acc.compose(&Self::generator(i)?)))
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        GroupElement { word, matrix: self.matrix * other.matrix }
    }

    pub fn inverse(&self) -> Self {
        let word: Vec<u8> = self.word.iter().rev().copied().collect();
        let matrix = word.iter().fold(IntMatrix::identity(), |acc, &i| acc * IntMatrix::reflection(i as usize));
        GroupElement { word, matrix }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        self.matrix.apply(w)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn order(&self) -> usize {
        let mut m = self.matrix;
        let mut n = 1;
        while !m.is_identity() {
            m = m * self.matrix;
            n += 1;
        }
        n
    }

    /// Determinant sign: +1 for rotations, −1 for odd words.
    pub fn parity(&self) -> i8 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Breadth-first closure of `generators` (1-based indices), left-multiplying.
fn closure(generators: &[usize]) -> Vec<GroupElement> {
    let gens: Vec<GroupElement> =
        generators.iter().map(|&i| GroupElement::generator(i).expect("generator index in range")).collect();
    let mut seen: HashMap<IntMatrix, usize> = HashMap::new();
    let mut out = vec![GroupElement::identity()];
    seen.insert(IntMatrix::identity(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&out[idx]);
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(next.matrix) {
                slot.insert(out.len());
                queue.push_back(out.len());
                out.push(next);
            }
        }
    }
    out
}

/// A subgroup of W(A4), with its elements sorted by matrix.
#[derive(Clone, Debug)]
pub struct Subgroup {
    /// Generating simple reflections when the subgroup is parabolic.
    pub generators: Option<Vec<usize>>,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    fn from_elements(generators: Option<Vec<usize>>, mut elements: Vec<GroupElement>) -> Self {
        elements.sort_by_key(|g| g.matrix);
        elements.dedup_by(|a, b| a.matrix == b.matrix);
        Subgroup { generators, elements }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.elements.binary_search_by(|e| e.matrix.cmp(m)).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| self.elements.iter().all(|b| self.contains(&(a.matrix * b.matrix))))
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.order() == other.order() && self.elements.iter().all(|e| other.contains(&e.matrix))
    }
}

/// The subgroup generated by `{rⱼ : j ∈ J}`.
pub fn parabolic(generators: &[usize]) -> Result<Subgroup> {
    if let Some(&bad) = generators.iter().find(|&&i| !(1..=RANK).contains(&i)) {
        return Err(Error::InvalidGenerator(bad));
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    Ok(Subgroup::from_elements(Some(gens.clone()), closure(&gens)))
}

/// All 120 elements of W(A4), with a matrix index.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<GroupElement>,
    index: HashMap<IntMatrix, usize>,
}

impl WeylGroup {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn find(&self, m: &IntMatrix) -> Option<&GroupElement> {
        self.index.get(m).map(|&i| &self.elements[i])
    }

    pub fn position(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| self.elements.iter().all(|b| self.index.contains_key(&(a.matrix * b.matrix))))
    }

    /// All `g` with `g·w = w`. For dominant `w` this is the parabolic
    /// subgroup generated by the reflections whose labels vanish.
    pub fn stabilizer(&self, w: &Weight) -> Subgroup {
        let elements: Vec<GroupElement> = self.elements.iter().filter(|g| g.apply(w) == *w).cloned().collect();
        let generators = w.is_dominant().then(|| (1..=RANK).filter(|&i| w.label(i).is_zero()).collect());
        Subgroup::from_elements(generators, elements)
    }
}

pub fn generate_group() -> WeylGroup {
    let elements = closure(&[1, 2, 3, 4]);
    let index = elements.iter().enumerate().map(|(i, g)| (g.matrix, i)).collect();
    WeylGroup { elements, index }
}

/// `rᵢ w`.
pub fn reflect(i: usize, w: &Weight) -> Result<Weight> {
    if !(1..=RANK).contains(&i) {
        return Err(Error::InvalidGenerator(i));
    }
    let ai = w.label(i).clone();
    Ok(Weight(std::array::from_fn(|j| &w.0[j] - &ai * rat(CARTAN[i - 1][j], 1))))
}

/// Orbit of `w` under the subgroup generated by `generators`, each point paired
/// with an element carrying `w` to it. Breadth-first, so words are short.
pub fn orbit_with_elements(generators: &[usize], w: &Weight) -> Vec<(Weight, GroupElement)> {
    let gens: Vec<GroupElement> =
        generators.iter().map(|&i| GroupElement::generator(i).expect("generator index in range")).collect();
    let mut seen = BTreeSet::from([w.clone()]);
    let mut out = vec![(w.clone(), GroupElement::identity())];
    let mut head = 0;
    while head < out.len() {
        let (v, g) = out[head].clone();
        head += 1;
        for r in &gens {
            let image = r.apply(&v);
            if seen.insert(image.clone()) {
                out.push((image, r.compose(&g)));
            }
        }
    }
    out
}

/// Orbit under the subgroup generated by `generators`, sorted.
pub fn parabolic_orbit(generators: &[usize], w: &Weight) -> Vec<Weight> {
    let mut pts: Vec<Weight> = orbit_with_elements(generators, w).into_iter().map(|(v, _)| v).collect();
    pts.sort();
    pts
}

/// `O(Λ) = W(A4)Λ`, sorted.
pub fn orbit(w: &Weight) -> Vec<Weight> {
    parabolic_orbit(&[1, 2, 3, 4], w)
}

/// Dominant representative of `w` under the subgroup generated by
/// `generators`: reflect in any generator with a negative label until none
/// is left. Returns the representative and an element mapping `w` to it.
pub fn dominant_representative(generators: &[usize], w: &Weight) -> (Weight, GroupElement) {
    let mut v = w.clone();
    let mut g = GroupElement::identity();
    while let Some(&i) = generators.iter().find(|&&i| v.label(i).is_negative()) {
        v = reflect(i, &v).expect("generator index in range");
        g = GroupElement::generator(i).expect("generator index in range").compose(&g);
    }
    (v, g)
}

/// Dimension of the affine span of `points` (−1 is reported as 0 for an empty set).
pub fn affine_rank(points: &[Weight]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let mut rows: Vec<[Rational; RANK]> = points[1..].iter().map(|p| (p - first).0).collect();
    let mut rank = 0;
    for col in 0..RANK {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &p[col];
                for (x, pc) in row.iter_mut().zip(&p) {
                    *x -= &f * pc;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(l: [i64; 4]) -> Weight {
        Weight::from_ints(l)
    }

    #[test]
    fn cartan_inverse_is_inverse() {
        assert!(CartanData::a4().is_consistent());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(1, &w([1, 0, 0, 0])).unwrap(), w([-1, 1, 0, 0]));
        assert_eq!(reflect(2, &w([1, 0, 0, 0])).unwrap(), w([1, 0, 0, 0]));
        let v = w([3, -2, 5, 1]);
        for i in 1..=4 {
            assert_eq!(reflect(i, &reflect(i, &v).unwrap()).unwrap(), v);
            assert_eq!(IntMatrix::reflection(i).apply(&v), reflect(i, &v).unwrap());
        }
        assert_eq!(reflect(5, &v), Err(Error::InvalidGenerator(5)));
    }

    #[test]
    fn group_basics() {
        let g = generate_group();
        assert_eq!(g.len(), GROUP_ORDER);
        assert!(g.is_closed());
        assert!(g.find(&IntMatrix::identity()).is_some());
        for i in 1..=4 {
            assert_eq!(GroupElement::generator(i).unwrap().order(), 2);
        }
        assert_eq!(GroupElement::from_word(&[1, 2]).unwrap().order(), 3);
        assert_eq!(GroupElement::from_word(&[1, 3, 2, 4]).unwrap().order(), 5);
        // every element's word reproduces its matrix
        for e in g.elements() {
            let words: Vec<usize> = e.word().iter().map(|&x| x as usize).collect();
            assert_eq!(GroupElement::from_word(&words).unwrap().matrix(), e.matrix());
            assert!(e.compose(&e.inverse()).is_identity());
        }
    }

    #[test]
    fn braid_relations() {
        for i in 1..=4usize {
            for j in 1..=4usize {
                let m = IntMatrix::reflection(i) * IntMatrix::reflection(j);
                let order = match i.abs_diff(j) {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                assert!(m.pow(order).is_identity());
                for k in 1..order {
                    assert!(!m.pow(k).is_identity());
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit(&w([1, 0, 0, 0])).len(), 5);
        assert_eq!(orbit(&w([0, 1, 0, 0])).len(), 10);
        assert_eq!(orbit(&w([1, 1, 1, 1])).len(), 120);
        assert_eq!(orbit(&w([0, 0, 0, 0])), vec![w([0, 0, 0, 0])]);
        let expected: BTreeSet<Weight> =
            [w([1, 0, 0, 0]), w([-1, 1, 0, 0]), w([0, -1, 1, 0]), w([0, 0, -1, 1]), w([0, 0, 0, -1])].into();
        assert_eq!(orbit(&w([1, 0, 0, 0])).into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn stabilizer_examples() {
        let g = generate_group();
        let s = g.stabilizer(&w([1, 0, 0, 0]));
        assert_eq!(s.order(), 24);
        assert!(s.same_elements(&parabolic(&[2, 3, 4]).unwrap()));
        let s = g.stabilizer(&w([1, 0, 1, 0]));
        assert_eq!(s.order(), 4);
        assert!(s.same_elements(&parabolic(&[2, 4]).unwrap()));
        assert_eq!(s.generators, Some(vec![2, 4]));
        assert_eq!(g.stabilizer(&w([1, 1, 1, 1])).order(), 1);
    }

    #[test]
    fn parabolic_orders() {
        let cases: [(&[usize], usize); 8] = [
            (&[1, 2, 3], 24),
            (&[2, 3, 4], 24),
            (&[1, 3, 4], 12),
            (&[1, 2, 4], 12),
            (&[2, 4], 4),
            (&[2, 3], 6),
            (&[], 1),
            (&[1, 2, 3, 4], 120),
        ];
        for (j, n) in cases {
            let p = parabolic(j).unwrap();
            assert_eq!(p.order(), n, "{j:?}");
            assert!(p.is_closed());
        }
        assert!(parabolic(&[0]).is_err());
    }

    #[test]
    fn flip_examples() {
        assert_eq!(dynkin_flip(&w([1, 1, 0, 1])), w([1, 0, 1, 1]));
        assert_eq!(dynkin_flip(&w([1, 1, 1, 1])), w([1, 1, 1, 1]));
        assert_eq!(dynkin_flip(&w([1, 0, 0, 0])), w([0, 0, 0, 1]));
        // orbit of the flip is the negated orbit
        for l in [[1, 0, 0, 0], [1, 1, 0, 1], [0, 1, 1, 0], [2, 0, 1, 3]] {
            let a: BTreeSet<Weight> = orbit(&dynkin_flip(&w(l))).into_iter().collect();
            let b: BTreeSet<Weight> = orbit(&w(l)).into_iter().map(|v| -v).collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn affine_ranks() {
        assert_eq!(affine_rank(&parabolic_orbit(&[1, 2, 3], &w([0, 1, 0, 0]))), 3);
        assert_eq!(affine_rank(&parabolic_orbit(&[1, 2, 4], &w([1, 0, 1, 0]))), 2);
        assert_eq!(affine_rank(&[w([1, 2, 3, 4])]), 0);
    }

    fn arb_weight() -> impl Strategy<Value = Weight> {
        prop::array::uniform4((-5i64..6, 1i64..4)).prop_map(|c| Weight(c.map(|(n, d)| rat(n, d))))
    }

    proptest! {
        #[test]
        fn orbit_stabilizer_and_invariance(v in arb_weight(), u in arb_weight()) {
            let g = generate_group();
            let orb = orbit(&v);
            prop_assert_eq!(orb.len() * g.stabilizer(&v).order(), GROUP_ORDER);
            prop_assert_eq!(orb.iter().filter(|x| x.is_dominant()).count(), 1);
            for e in g.elements() {
                prop_assert_eq!(e.apply(&v).dot(&e.apply(&u)), v.dot(&u));
            }
            let (d, h) = dominant_representative(&[1, 2, 3, 4], &v);
            prop_assert!(d.is_dominant());
            prop_assert_eq!(h.apply(&v), d);
        }
    }
}
