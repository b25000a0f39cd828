//! Geometric crystal structure on `Y_{i_1}(c_1) ⋯ Y_{i_l}(c_l)` for an
//! arbitrary simply-laced Cartan matrix and word `(i_1, …, i_l)`.
//!
//! With the shared denominators
//! `D_m = c_1^{a_{i_1,k}} ⋯ c_{m-1}^{a_{i_{m-1},k}} c_m`:
//!
//! * `ε_k = Σ_{i_m = k} 1/D_m`
//! * `γ_k = Π_m c_m^{a_{i_m,k}}`
//! * `e_k^c` rescales `c_j` by
//!   `[Σ_{m≤j} c/D_m + Σ_{m>j} 1/D_m] / [Σ_{m<j} c/D_m + Σ_{m≥j} 1/D_m]`,
//!   all sums over positions with `i_m = k` and running up to the word length.
//!
//! The word is not checked for reducedness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::spin_module::CARTAN;

/// Symmetric generalized Cartan matrix with entries in `{2, 0, −1}`,
/// indexed by arbitrary node labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplyLacedCartan {
    nodes: Vec<usize>,
    #[serde(rename = "cartan")]
    entries: Vec<Vec<i32>>,
}

impl SimplyLacedCartan {
    pub fn new(nodes: Vec<usize>, entries: Vec<Vec<i32>>) -> Result<Self> {
        let n = nodes.len();
        if n == 0 {
            return Err(Error::parse("Cartan matrix needs at least one node"));
        }
        let mut sorted = nodes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::parse("duplicate node labels"));
        }
        if entries.len() != n || entries.iter().any(|row| row.len() != n) {
            return Err(Error::parse("Cartan matrix must be square and match the node list"));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::parse("Cartan diagonal must be 2"));
            }
            for j in 0..n {
                if i != j && !matches!(entries[i][j], 0 | -1) {
                    return Err(Error::parse("off-diagonal Cartan entries must be 0 or -1"));
                }
                if entries[i][j] != entries[j][i] {
                    return Err(Error::parse("Cartan matrix must be symmetric"));
                }
            }
        }
        Ok(SimplyLacedCartan { nodes, entries })
    }

    /// The `D_6^(1)` matrix restricted to `nodes`.
    pub fn d6_affine_restricted(nodes: &[usize]) -> Result<Self> {
        if let Some(&bad) = nodes.iter().find(|&&k| k >= CARTAN.len()) {
            return Err(Error::InvalidNode { node: bad, context: "D6^(1)" });
        }
        let entries = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| CARTAN[i][j]).collect())
            .collect();
        Self::new(nodes.to_vec(), entries)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    fn position(&self, label: usize) -> Option<usize> {
        self.nodes.iter().position(|&n| n == label)
    }

    pub fn contains(&self, label: usize) -> bool {
        self.position(label).is_some()
    }

    /// `a_{ij}` by node label. Both labels must be nodes of the matrix.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        let pi = self.position(i).expect("node label");
        let pj = self.position(j).expect("node label");
        self.entries[pi][pj]
    }
}

/// A Cartan matrix and a word over its nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WordCrystalRepr", into = "WordCrystalRepr")]
pub struct WordCrystal {
    cartan: SimplyLacedCartan,
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WordCrystalRepr {
    nodes: Vec<usize>,
    cartan: Vec<Vec<i32>>,
    word: Vec<usize>,
}

impl TryFrom<WordCrystalRepr> for WordCrystal {
    type Error = Error;
    fn try_from(r: WordCrystalRepr) -> Result<Self> {
        WordCrystal::new(SimplyLacedCartan::new(r.nodes, r.cartan)?, r.word)
    }
}

impl From<WordCrystal> for WordCrystalRepr {
    fn from(w: WordCrystal) -> Self {
        WordCrystalRepr { nodes: w.cartan.nodes, cartan: w.cartan.entries, word: w.word }
    }
}

pub const PRESET_V1: &str = "d6spin-v1";
pub const PRESET_V2: &str = "d6spin-v2";

impl WordCrystal {
    pub fn new(cartan: SimplyLacedCartan, word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::parse("word must be nonempty"));
        }
        if let Some(&bad) = word.iter().find(|&&i| !cartan.contains(i)) {
            return Err(Error::InvalidNode { node: bad, context: "word letter" });
        }
        Ok(WordCrystal { cartan, word })
    }

    /// Named instances: `"d6spin-v1"` (word of `V_1` over `𝔤_0`, nodes 1..6)
    /// and `"d6spin-v2"` (word of `V_2` over `𝔤_1`, nodes 0, 2..6).
    pub fn preset(name: &str) -> Result<Self> {
        use crate::d6_spin_crystal::{NODES_V1, NODES_V2, WORD_V1, WORD_V2};
        let (nodes, word): (&[usize], &[usize]) = match name {
            PRESET_V1 => (&NODES_V1, &WORD_V1),
            PRESET_V2 => (&NODES_V2, &WORD_V2),
            _ => return Err(Error::parse(format!("unknown preset `{name}`"))),
        };
        Self::new(SimplyLacedCartan::d6_affine_restricted(nodes)?, word.to_vec())
    }

    pub fn cartan(&self) -> &SimplyLacedCartan {
        &self.cartan
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn check_node(&self, k: usize) -> Result<()> {
        if self.cartan.contains(k) {
            Ok(())
        } else {
            Err(Error::InvalidNode { node: k, context: "word crystal" })
        }
    }

    fn check_params(&self, params: &ParamTuple) -> Result<()> {
        if params.len() != self.len() {
            return Err(Error::domain(format!(
                "expected {} parameters, got {}",
                self.len(),
                params.len()
            )));
        }
        Ok(())
    }

    /// `1/D_m` for every position `m` carrying letter `k`, in word order.
    fn inverse_denominators(&self, params: &ParamTuple, k: usize) -> Result<Vec<(usize, Rational)>> {
        let mut prefix = Rational::one();
        let mut out = Vec::new();
        for (m, (&letter, c)) in self.word.iter().zip(params.values()).enumerate() {
            if letter == k {
                out.push((m, (&prefix * c).recip()?));
            }
            prefix *= c.pow(self.cartan.entry(letter, k))?;
        }
        Ok(out)
    }
}

/// Nonzero parameters `(c_1, …, c_l)` aligned with a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct ParamTuple(Vec<Rational>);

impl ParamTuple {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(pos) = values.iter().position(Rational::is_zero) {
            return Err(Error::domain(format!("parameter {} is zero", pos + 1)));
        }
        Ok(ParamTuple(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<Rational>> for ParamTuple {
    type Error = Error;
    fn try_from(v: Vec<Rational>) -> Result<Self> {
        ParamTuple::new(v)
    }
}

impl From<ParamTuple> for Vec<Rational> {
    fn from(p: ParamTuple) -> Self {
        p.0
    }
}

/// `D_m = c_1^{a_{i_1,k}} ⋯ c_{m-1}^{a_{i_{m-1},k}} c_m` for the 0-based
/// position `m`.
pub fn partial_monomial(wc: &WordCrystal, params: &ParamTuple, k: usize, m: usize) -> Result<Rational> {
    wc.check_params(params)?;
    wc.check_node(k)?;
    if m >= wc.len() {
        return Err(Error::domain(format!("position {m} out of range")));
    }
    let mut d = params.values()[m].clone();
    for (&letter, c) in wc.word[..m].iter().zip(params.values()) {
        d *= c.pow(wc.cartan.entry(letter, k))?;
    }
    Ok(d)
}

/// `e_k^c` on the parameter tuple.
pub fn generic_act_e(wc: &WordCrystal, params: &ParamTuple, k: usize, c: &Rational) -> Result<ParamTuple> {
    wc.check_params(params)?;
    wc.check_node(k)?;
    if c.is_zero() {
        return Err(Error::domain("e_k^c needs c != 0"));
    }
    let terms = wc.inverse_denominators(params, k)?;
    let total: Rational = terms.iter().map(|(_, t)| t).sum();

    // Walk the k-positions once. Before position j, `done` holds Σ_{m<j} 1/D_m.
    let mut values = params.values().to_vec();
    let mut done = Rational::zero();
    for (m, t) in &terms {
        let rest_after = &total - &done - t;
        let num = c * (&done + t) + &rest_after;
        let den = c * &done + (&total - &done);
        if den.is_zero() {
            return Err(Error::domain(format!("e_{k}^c: vanishing denominator at position {}", m + 1)));
        }
        values[*m] = &values[*m] * num.checked_div(&den)?;
        done += t;
    }
    ParamTuple::new(values)
}

/// `ε_k = Σ_{i_m = k} 1/D_m`.
pub fn generic_epsilon(wc: &WordCrystal, params: &ParamTuple, k: usize) -> Result<Rational> {
    wc.check_params(params)?;
    wc.check_node(k)?;
    Ok(wc.inverse_denominators(params, k)?.into_iter().map(|(_, t)| t).sum())
}

/// `γ_k = c_1^{a_{i_1,k}} ⋯ c_l^{a_{i_l,k}}`.
pub fn generic_gamma(wc: &WordCrystal, params: &ParamTuple, k: usize) -> Result<Rational> {
    wc.check_params(params)?;
    wc.check_node(k)?;
    let mut g = Rational::one();
    for (&letter, c) in wc.word.iter().zip(params.values()) {
        g *= c.pow(wc.cartan.entry(letter, k))?;
    }
    Ok(g)
}
