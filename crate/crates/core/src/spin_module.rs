//! The 32-dimensional fundamental module `W(ϖ_6)` of `D_6^(1)`.
//!
//! Basis vectors are sign vectors `(i_1, …, i_6)` with an even number of
//! minus signs. A sign vector is stored as a 6-bit mask (bit `j-1` set when
//! `i_j = −`), so the basis index is `Σ b_j 2^(j-1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::d6_spin_crystal::{PointV1, PointV2, WORD_V1, WORD_V2};
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Number of nodes of the affine diagram, `I = {0, …, 6}`.
pub const NODE_COUNT: usize = 7;

/// Cartan matrix of `D_6^(1)`: node 2 meets 0, 1, 3; node 4 meets 3, 5, 6.
pub const CARTAN: [[i32; NODE_COUNT]; NODE_COUNT] = [
    [2, 0, -1, 0, 0, 0, 0],
    [0, 2, -1, 0, 0, 0, 0],
    [-1, -1, 2, -1, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, -1, 2, -1, -1],
    [0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 2],
];

/// Diagram automorphism `σ = (0 6)(1 5)(2 4)`.
pub const SIGMA: [usize; NODE_COUNT] = [6, 5, 4, 3, 2, 1, 0];

pub fn check_node(k: usize) -> Result<usize> {
    if k < NODE_COUNT {
        Ok(k)
    } else {
        Err(Error::InvalidNode { node: k, context: "D6^(1)" })
    }
}

pub fn cartan_entry(i: usize, j: usize) -> i32 {
    CARTAN[i][j]
}

pub fn sigma_node(k: usize) -> usize {
    SIGMA[k]
}

/// One of the 32 even-parity sign vectors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinBasis(u8);

impl SpinBasis {
    pub const COUNT: usize = 32;

    /// Basis vector with the given bit index, if it has even parity.
    pub fn from_index(index: u8) -> Option<Self> {
        (index < 64 && index.count_ones() % 2 == 0).then_some(SpinBasis(index))
    }

    /// Builds from `+1`/`-1` entries `(i_1, …, i_6)`.
    pub fn from_signs(signs: [i8; 6]) -> Option<Self> {
        let mut bits = 0u8;
        for (j, s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => bits |= 1 << j,
                _ => return None,
            }
        }
        Self::from_index(bits)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// All 32 basis vectors in index order.
    pub fn all() -> impl Iterator<Item = SpinBasis> {
        (0u8..64).filter_map(SpinBasis::from_index)
    }

    /// Sign at 1-based position `j`: `+1` or `-1`.
    pub fn sign(self, j: usize) -> i8 {
        if self.minus(j) {
            -1
        } else {
            1
        }
    }

    fn minus(self, j: usize) -> bool {
        self.0 & (1 << (j - 1)) != 0
    }

    fn flip(self, positions: &[usize]) -> SpinBasis {
        let mask = positions.iter().fold(0u8, |m, j| m | 1 << (j - 1));
        SpinBasis(self.0 ^ mask)
    }

    /// The pair of positions read by node `k`, and the signs (as "is minus")
    /// that `f_k` requires there.
    fn lowering_pattern(k: usize) -> ((usize, usize), (bool, bool)) {
        match k {
            0 => ((1, 2), (true, true)),
            6 => ((5, 6), (false, false)),
            _ => ((k, k + 1), (false, true)),
        }
    }

    fn matches(self, k: usize, raising: bool) -> bool {
        let ((a, b), (ma, mb)) = Self::lowering_pattern(k);
        // e_k wants the opposite signs of f_k on the same two positions.
        let (ma, mb) = if raising { (!ma, !mb) } else { (ma, mb) };
        self.minus(a) == ma && self.minus(b) == mb
    }
}

impl fmt::Display for SpinBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=6 {
            f.write_str(if self.minus(j) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SpinBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses a six-character sign string such as `"++++--"`. The Unicode minus
/// `−` is accepted as well as ASCII `-`.
impl FromStr for SpinBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | '(' | ')' | ' '))
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                _ => Err(Error::parse(format!("invalid sign `{c}` in `{s}`"))),
            })
            .collect::<Result<_>>()?;
        let signs: [i8; 6] = signs
            .try_into()
            .map_err(|_| Error::parse(format!("sign string `{s}` must have 6 signs")))?;
        SpinBasis::from_signs(signs)
            .ok_or_else(|| Error::parse(format!("`{s}` has an odd number of minus signs")))
    }
}

/// `f_k v`, or `None` when `f_k` kills `v`.
pub fn lowering_action(k: usize, v: SpinBasis) -> Result<Option<SpinBasis>> {
    check_node(k)?;
    Ok(lower(k, v))
}

/// `e_k v`, or `None` when `e_k` kills `v`.
pub fn raising_action(k: usize, v: SpinBasis) -> Result<Option<SpinBasis>> {
    check_node(k)?;
    Ok(raise(k, v))
}

/// `⟨α̌_k, wt(v)⟩ ∈ {−1, 0, 1}`.
pub fn coroot_pairing(k: usize, v: SpinBasis) -> Result<i32> {
    check_node(k)?;
    Ok(pairing(k, v))
}

// Unchecked forms for callers that already validated `k`.

pub(crate) fn lower(k: usize, v: SpinBasis) -> Option<SpinBasis> {
    let ((a, b), _) = SpinBasis::lowering_pattern(k);
    v.matches(k, false).then(|| v.flip(&[a, b]))
}

pub(crate) fn raise(k: usize, v: SpinBasis) -> Option<SpinBasis> {
    let ((a, b), _) = SpinBasis::lowering_pattern(k);
    v.matches(k, true).then(|| v.flip(&[a, b]))
}

pub(crate) fn pairing(k: usize, v: SpinBasis) -> i32 {
    if v.matches(k, false) {
        1
    } else if v.matches(k, true) {
        -1
    } else {
        0
    }
}

/// `σ(i_1, …, i_6) = (−i_6, …, −i_1)`.
pub fn sigma_on_basis(v: SpinBasis) -> SpinBasis {
    let mut bits = 0u8;
    for j in 1..=6 {
        // position j of the image is the negated sign at 7 - j
        if !v.minus(7 - j) {
            bits |= 1 << (j - 1);
        }
    }
    SpinBasis(bits)
}

/// Sparse vector of `W(ϖ_6)`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpinVector {
    coeffs: BTreeMap<SpinBasis, Rational>,
}

impl SpinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(v: SpinBasis) -> Self {
        let mut out = Self::zero();
        out.add_term(v, Rational::one());
        out
    }

    /// Coefficient of `v` (zero when absent).
    pub fn get(&self, v: SpinBasis) -> Rational {
        self.coeffs.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, v: SpinBasis, r: Rational) {
        if r.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(v).or_insert_with(Rational::zero);
        *entry += r;
        if entry.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    /// Nonzero terms in basis-index order.
    pub fn iter(&self) -> impl Iterator<Item = (SpinBasis, &Rational)> {
        self.coeffs.iter().map(|(v, r)| (*v, r))
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> SpinVector {
        let mut out = SpinVector::zero();
        for (v, r) in self.iter() {
            out.add_term(v, r * s);
        }
        out
    }

    pub fn add(&self, other: &SpinVector) -> SpinVector {
        let mut out = self.clone();
        for (v, r) in other.iter() {
            out.add_term(v, r.clone());
        }
        out
    }
}

impl fmt::Debug for SpinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter().map(|(v, r)| (v.to_string(), r))).finish()
    }
}

impl Serialize for SpinVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (v, r) in self.iter() {
            map.serialize_entry(&v.to_string(), r)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SpinVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Rational>::deserialize(deserializer)?;
        let mut out = SpinVector::zero();
        for (key, r) in raw {
            let v: SpinBasis = key.parse().map_err(serde::de::Error::custom)?;
            out.add_term(v, r);
        }
        Ok(out)
    }
}

/// `Y_k(c) = (1 + f_k/c) c^{α̌_k}` applied to `vec`. Since `f_k² = 0` the
/// exponential truncates after the linear term.
pub fn apply_y(k: usize, c: &Rational, vec: &SpinVector) -> Result<SpinVector> {
    check_node(k)?;
    if c.is_zero() {
        return Err(Error::domain(format!("Y_{k}(c) needs c != 0")));
    }
    let c_inv = c.recip()?;
    let mut out = SpinVector::zero();
    for (v, r) in vec.iter() {
        let scaled = r * c.pow(pairing(k, v))?;
        if let Some(w) = lower(k, v) {
            out.add_term(w, &scaled * &c_inv);
        }
        out.add_term(v, scaled);
    }
    Ok(out)
}

/// `Y_{i_1}(c_1) ⋯ Y_{i_l}(c_l) anchor`, applying the rightmost factor first.
pub fn build_from_word(word: &[usize], params: &[Rational], anchor: SpinBasis) -> Result<SpinVector> {
    if word.len() != params.len() {
        return Err(Error::domain("word and parameter lengths differ"));
    }
    let mut vec = SpinVector::unit(anchor);
    for (k, c) in word.iter().zip(params).rev() {
        vec = apply_y(*k, c, &vec)?;
    }
    Ok(vec)
}

/// `(+,+,+,+,+,+)`, the `𝔤_0` highest weight vector.
pub fn anchor_v1() -> SpinBasis {
    SpinBasis(0)
}

/// `(−,+,+,+,+,−)`, the `𝔤_1` highest weight vector.
pub fn anchor_v2() -> SpinBasis {
    SpinBasis(0b100001)
}

pub fn build_v1(x: &PointV1) -> Result<SpinVector> {
    build_from_word(&WORD_V1, &x.to_params(), anchor_v1())
}

pub fn build_v2(y: &PointV2) -> Result<SpinVector> {
    build_from_word(&WORD_V2, &y.to_params(), anchor_v2())
}

/// Induced action of `σ` on vectors, basis-componentwise.
pub fn apply_sigma(vec: &SpinVector) -> SpinVector {
    let mut out = SpinVector::zero();
    for (v, r) in vec.iter() {
        out.add_term(sigma_on_basis(v), r.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{sample_positive, trial_rng};
    use proptest::prelude::*;

    fn b(s: &str) -> SpinBasis {
        s.parse().unwrap()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn cartan_data_invariants() {
        for i in 0..NODE_COUNT {
            assert_eq!(CARTAN[i][i], 2);
            assert_eq!(SIGMA[SIGMA[i]], i);
            for j in 0..NODE_COUNT {
                assert_eq!(CARTAN[i][j], CARTAN[j][i]);
                assert_eq!(CARTAN[SIGMA[i]][SIGMA[j]], CARTAN[i][j]);
            }
        }
        for j in 1..=4 {
            assert_eq!(CARTAN[j][j + 1], -1);
        }
        assert_eq!(CARTAN[0][2], -1);
        assert_eq!(CARTAN[4][6], -1);
        let off_diag_edges = (0..7)
            .flat_map(|i| (0..7).map(move |j| (i, j)))
            .filter(|&(i, j)| i < j && CARTAN[i][j] != 0)
            .count();
        assert_eq!(off_diag_edges, 6);
    }

    #[test]
    fn basis_has_32_even_elements() {
        let all: Vec<_> = SpinBasis::all().collect();
        assert_eq!(all.len(), 32);
        for v in &all {
            let product: i32 = (1..=6).map(|j| v.sign(j) as i32).product();
            assert_eq!(product, 1);
            assert_eq!(v.to_string().parse::<SpinBasis>().unwrap(), *v);
        }
        assert!("+++++-".parse::<SpinBasis>().is_err());
        assert!("+++++".parse::<SpinBasis>().is_err());
        assert_eq!(b("(+,+,−,−,+,+)"), b("++--++"));
    }

    #[test]
    fn lowering_examples() {
        assert_eq!(lowering_action(6, b("++++++")).unwrap(), Some(b("++++--")));
        assert_eq!(lowering_action(0, b("--++++")).unwrap(), Some(b("++++++")));
        assert_eq!(lowering_action(2, b("++++++")).unwrap(), None);
        assert!(matches!(lowering_action(7, b("++++++")), Err(Error::InvalidNode { .. })));
    }

    #[test]
    fn raising_examples() {
        assert_eq!(raising_action(0, b("++++++")).unwrap(), Some(b("--++++")));
        assert_eq!(raising_action(6, b("++++--")).unwrap(), Some(b("++++++")));
        assert_eq!(raising_action(1, b("+-+++-")).unwrap(), None);
        assert!(raising_action(9, b("++++++")).is_err());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(coroot_pairing(6, b("++++++")).unwrap(), 1);
        assert_eq!(coroot_pairing(0, b("++++++")).unwrap(), -1);
        assert_eq!(coroot_pairing(3, b("++++++")).unwrap(), 0);
        assert!(coroot_pairing(7, b("++++++")).is_err());
    }

    #[test]
    fn nilpotent_and_dual() {
        for k in 0..NODE_COUNT {
            for v in SpinBasis::all() {
                if let Some(w) = lower(k, v) {
                    assert_eq!(lower(k, w), None, "f_{k}^2 != 0 at {v}");
                    assert_eq!(raise(k, w), Some(v));
                }
                if let Some(w) = raise(k, v) {
                    assert_eq!(raise(k, w), None, "e_{k}^2 != 0 at {v}");
                    assert_eq!(lower(k, w), Some(v));
                }
            }
        }
    }

    #[test]
    fn lowering_shifts_weight_by_simple_root() {
        for k in 0..NODE_COUNT {
            for v in SpinBasis::all() {
                if let Some(w) = lower(k, v) {
                    for j in 0..NODE_COUNT {
                        assert_eq!(pairing(j, w), pairing(j, v) - CARTAN[j][k]);
                    }
                }
            }
        }
    }

    /// The unique basis vector whose pairings are the σ-permuted pairings of `v`.
    fn sigma_by_weights(v: SpinBasis) -> SpinBasis {
        let candidates: Vec<_> = SpinBasis::all()
            .filter(|w| (0..NODE_COUNT).all(|k| pairing(SIGMA[k], *w) == pairing(k, v)))
            .collect();
        assert_eq!(candidates.len(), 1, "weight of {v} not unique");
        candidates[0]
    }

    #[test]
    fn sigma_matches_weight_oracle() {
        assert_eq!(sigma_by_weights(b("++++++")), b("------"));
        assert_eq!(sigma_by_weights(b("-++++-")), b("+----+"));
        for v in SpinBasis::all() {
            assert_eq!(sigma_on_basis(v), sigma_by_weights(v));
            assert_eq!(sigma_on_basis(sigma_on_basis(v)), v);
        }
        assert_eq!(sigma_on_basis(b("++++++")), b("------"));
        assert_eq!(sigma_on_basis(b("-++++-")), b("+----+"));
    }

    #[test]
    fn apply_y_examples() {
        let c = r(5, 3);
        let out = apply_y(6, &c, &SpinVector::unit(b("++++++"))).unwrap();
        let mut expected = SpinVector::unit(b("++++++")).scale(&c);
        expected.add_term(b("++++--"), Rational::one());
        assert_eq!(out, expected);

        let out = apply_y(3, &c, &SpinVector::unit(b("++++++"))).unwrap();
        assert_eq!(out, SpinVector::unit(b("++++++")));

        // c = 1 on a vector killed by f_2: identity
        let mut vec = SpinVector::unit(b("++++++"));
        vec.add_term(b("--++++"), r(7, 2));
        assert_eq!(apply_y(2, &Rational::one(), &vec).unwrap(), vec);

        assert!(matches!(apply_y(2, &Rational::zero(), &vec), Err(Error::Domain(_))));
    }

    #[test]
    fn apply_sigma_examples() {
        assert_eq!(apply_sigma(&SpinVector::unit(b("++++++"))), SpinVector::unit(b("------")));
        assert!(apply_sigma(&SpinVector::zero()).is_zero());
    }

    #[test]
    fn json_uses_sign_strings() {
        let mut vec = SpinVector::unit(b("++++++"));
        vec.add_term(b("++++--"), r(3, 2));
        let json = serde_json::to_string(&vec).unwrap();
        assert_eq!(json, r#"{"++++++":"1","++++--":"3/2"}"#);
        let back: SpinVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec);
        let sparse: SpinVector = serde_json::from_str(r#"{"------":"0"}"#).unwrap();
        assert!(sparse.is_zero());
    }

    fn random_vector(seed: u64) -> SpinVector {
        let mut rng = trial_rng(seed, 0);
        let mut vec = SpinVector::zero();
        for v in SpinBasis::all() {
            if sample_positive(&mut rng, 3) > Rational::one() {
                vec.add_term(v, sample_positive(&mut rng, 20));
            }
        }
        vec
    }

    proptest! {
        #[test]
        fn apply_y_is_linear(seed in any::<u64>(), k in 0usize..7, p in 1i64..30, q in 1i64..30) {
            let c = r(p, q);
            let u = random_vector(seed);
            let v = random_vector(seed.wrapping_add(1));
            let s = r(q, p + 1);
            let lhs = apply_y(k, &c, &u.add(&v.scale(&s))).unwrap();
            let rhs = apply_y(k, &c, &u).unwrap().add(&apply_y(k, &c, &v).unwrap().scale(&s));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn apply_y_two_term_expansion(k in 0usize..7, idx in 0usize..32, p in 1i64..30, q in 1i64..30) {
            let c = r(p, q);
            let v = SpinBasis::all().nth(idx).unwrap();
            let out = apply_y(k, &c, &SpinVector::unit(v)).unwrap();
            let weight = c.pow(pairing(k, v)).unwrap();
            prop_assert_eq!(out.get(v), weight.clone());
            match lower(k, v) {
                Some(w) => {
                    prop_assert_eq!(out.get(w), &weight / &c);
                    prop_assert_eq!(out.support_len(), 2);
                }
                None => prop_assert_eq!(out.support_len(), 1),
            }
        }

        #[test]
        fn sigma_is_involution_on_vectors(seed in any::<u64>()) {
            let v = random_vector(seed);
            prop_assert_eq!(apply_sigma(&apply_sigma(&v)), v);
        }
    }
}
