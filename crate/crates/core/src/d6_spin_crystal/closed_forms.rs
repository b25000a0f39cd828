//! Closed-form `e_k^c`, `γ_k`, `ε_k` on `𝒱_1` (k = 0..6) and `ē_k^c`,
//! `γ̄_k`, `ε̄_k` on `𝒱_2` (k ∈ {0,2,3,4,5,6}).

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::points::{PointV1, PointV2};
use super::zero_node::{act_e0_v1, k_family};

/// Multipliers `c_{k_1}, …, c_{k_{n-1}}` built from the ordered monomials
/// `t_1..t_n`: the `j`-th is
/// `(c(t_1+…+t_j) + t_{j+1}+…+t_n) / (c(t_1+…+t_{j-1}) + t_j+…+t_n)`.
/// The last coordinate of the family is scaled by `c / Π multipliers`.
fn ladder(c: &Rational, terms: &[Rational]) -> Result<Vec<Rational>> {
    let mut factors = Vec::with_capacity(terms.len());
    for j in 1..terms.len() {
        let num: Rational = terms[..j].iter().map(|t| c * t).chain(terms[j..].iter().cloned()).sum();
        let den: Rational = terms[..j - 1]
            .iter()
            .map(|t| c * t)
            .chain(terms[j - 1..].iter().cloned())
            .sum();
        factors.push(num.checked_div(&den).map_err(|_| vanishing(j))?);
    }
    let prod: Rational = factors.iter().product();
    factors.push(c.checked_div(&prod).map_err(|_| vanishing(terms.len()))?);
    Ok(factors)
}

fn vanishing(j: usize) -> Error {
    Error::domain(format!("denominator of multiplier {j} vanishes"))
}

fn check_c(c: &Rational) -> Result<()> {
    if c.is_zero() {
        return Err(Error::domain("c must be nonzero"));
    }
    Ok(())
}

fn sq(r: &Rational) -> Rational {
    r * r
}

/// Family of `𝒱_1` coordinates moved by `e_k^c` (top to bottom) and the
/// monomials `t_j` of its multipliers.
fn family_v1(k: usize, x: &PointV1) -> Result<(Vec<usize>, Vec<Rational>)> {
    let out = match k {
        1 => (vec![PointV1::X1_1], vec![Rational::one()]),
        2 => (
            vec![PointV1::X2_2, PointV1::X2_1],
            vec![x.x2_2() * x.x2_1(), x.x3_2() * x.x1_1()],
        ),
        3 => (
            vec![PointV1::X3_3, PointV1::X3_2, PointV1::X3_1],
            vec![
                x.x3_3() * sq(x.x3_2()) * x.x3_1(),
                x.x4_3() * x.x3_2() * x.x3_1() * x.x2_2(),
                x.x4_3() * x.x4_2() * x.x2_2() * x.x2_1(),
            ],
        ),
        4 => (
            vec![PointV1::X4_4, PointV1::X4_3, PointV1::X4_2, PointV1::X4_1],
            vec![
                x.x4_4() * sq(x.x4_3()) * sq(x.x4_2()) * x.x4_1(),
                x.x5_2() * x.x4_3() * sq(x.x4_2()) * x.x4_1() * x.x3_3(),
                x.x6_2() * x.x5_2() * x.x4_2() * x.x4_1() * x.x3_3() * x.x3_2(),
                x.x6_2() * x.x5_2() * x.x5_1() * x.x3_3() * x.x3_2() * x.x3_1(),
            ],
        ),
        5 => (
            vec![PointV1::X5_2, PointV1::X5_1],
            vec![x.x5_2() * x.x5_1(), x.x4_3() * x.x4_2()],
        ),
        6 => (
            vec![PointV1::X6_3, PointV1::X6_2, PointV1::X6_1],
            vec![
                x.x6_3() * sq(x.x6_2()) * x.x6_1(),
                x.x6_2() * x.x6_1() * x.x4_4() * x.x4_3(),
                x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1(),
            ],
        ),
        _ => return Err(Error::InvalidNode { node: k, context: "e_k on V1" }),
    };
    Ok(out)
}

fn family_v2(k: usize, y: &PointV2) -> Result<(Vec<usize>, Vec<Rational>)> {
    let out = match k {
        0 => (vec![PointV2::Y0_1], vec![Rational::one()]),
        2 => (
            vec![PointV2::Y2_2, PointV2::Y2_1],
            vec![y.y2_2() * y.y2_1(), y.y3_2() * y.y0_1()],
        ),
        3 => (
            vec![PointV2::Y3_3, PointV2::Y3_2, PointV2::Y3_1],
            vec![
                y.y3_3() * sq(y.y3_2()) * y.y3_1(),
                y.y4_3() * y.y3_2() * y.y3_1() * y.y2_2(),
                y.y4_3() * y.y4_2() * y.y2_2() * y.y2_1(),
            ],
        ),
        4 => (
            vec![PointV2::Y4_4, PointV2::Y4_3, PointV2::Y4_2, PointV2::Y4_1],
            vec![
                y.y4_4() * sq(y.y4_3()) * sq(y.y4_2()) * y.y4_1(),
                y.y6_2() * y.y4_3() * sq(y.y4_2()) * y.y4_1() * y.y3_3(),
                y.y6_2() * y.y5_2() * y.y4_2() * y.y4_1() * y.y3_3() * y.y3_2(),
                y.y6_2() * y.y6_1() * y.y5_2() * y.y3_3() * y.y3_2() * y.y3_1(),
            ],
        ),
        5 => (
            vec![PointV2::Y5_3, PointV2::Y5_2, PointV2::Y5_1],
            vec![
                y.y5_3() * sq(y.y5_2()) * y.y5_1(),
                y.y5_2() * y.y5_1() * y.y4_4() * y.y4_3(),
                y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1(),
            ],
        ),
        6 => (
            vec![PointV2::Y6_2, PointV2::Y6_1],
            vec![y.y6_2() * y.y6_1(), y.y4_3() * y.y4_2()],
        ),
        _ => return Err(Error::InvalidNode { node: k, context: "e_k on V2" }),
    };
    Ok(out)
}

/// `e_k^c(V_1(x))` for `k ∈ {0,…,6}`; `k = 0` uses the K-family closed form.
pub fn act_e_v1(k: usize, c: &Rational, x: &PointV1) -> Result<PointV1> {
    check_c(c)?;
    if k == 0 {
        return act_e0_v1(c, x);
    }
    let (positions, terms) = family_v1(k, x)?;
    let factors = ladder(c, &terms)?;
    let mut out = x.clone();
    for (pos, f) in positions.into_iter().zip(&factors) {
        out.scale_at(pos, f);
    }
    out.revalidate()
}

/// `ē_k^c(V_2(y))` for `k ∈ {0,2,3,4,5,6}`.
pub fn act_e_v2(k: usize, c: &Rational, y: &PointV2) -> Result<PointV2> {
    check_c(c)?;
    let (positions, terms) = family_v2(k, y)?;
    let factors = ladder(c, &terms)?;
    let mut out = y.clone();
    for (pos, f) in positions.into_iter().zip(&factors) {
        out.scale_at(pos, f);
    }
    out.revalidate()
}

pub fn gamma_v1(k: usize, x: &PointV1) -> Result<Rational> {
    let g = match k {
        0 => Rational::one() / (x.x2_2() * x.x2_1()),
        1 => sq(x.x1_1()) / (x.x2_2() * x.x2_1()),
        2 => sq(x.x2_2()) * sq(x.x2_1()) / (x.x3_3() * x.x3_2() * x.x3_1() * x.x1_1()),
        3 => {
            sq(x.x3_3()) * sq(x.x3_2()) * sq(x.x3_1())
                / (x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1() * x.x2_2() * x.x2_1())
        }
        4 => {
            sq(x.x4_4()) * sq(x.x4_3()) * sq(x.x4_2()) * sq(x.x4_1())
                / (x.x6_3() * x.x6_2() * x.x6_1() * x.x5_2() * x.x5_1() * x.x3_3() * x.x3_2() * x.x3_1())
        }
        5 => sq(x.x5_2()) * sq(x.x5_1()) / (x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1()),
        6 => {
            sq(x.x6_3()) * sq(x.x6_2()) * sq(x.x6_1()) / (x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1())
        }
        _ => return Err(Error::InvalidNode { node: k, context: "gamma on V1" }),
    };
    Ok(g)
}

pub fn epsilon_v1(k: usize, x: &PointV1) -> Result<Rational> {
    let one = Rational::one();
    let e = match k {
        0 => k_family(x, &one).k,
        1 => x.x2_2() / x.x1_1(),
        2 => (x.x3_3() / x.x2_2()) * (one + x.x3_2() * x.x1_1() / (x.x2_2() * x.x2_1())),
        3 => {
            (x.x4_4() / x.x3_3())
                * (one
                    + x.x4_3() * x.x2_2() / (x.x3_3() * x.x3_2())
                    + x.x4_3() * x.x4_2() * x.x2_2() * x.x2_1() / (x.x3_3() * sq(x.x3_2()) * x.x3_1()))
        }
        4 => {
            (x.x6_3() / x.x4_4())
                * (one
                    + x.x5_2() * x.x3_3() / (x.x4_4() * x.x4_3())
                    + x.x6_2() * x.x5_2() * x.x3_3() * x.x3_2() / (x.x4_4() * sq(x.x4_3()) * x.x4_2())
                    + x.x6_2() * x.x5_2() * x.x5_1() * x.x3_3() * x.x3_2() * x.x3_1()
                        / (x.x4_4() * sq(x.x4_3()) * sq(x.x4_2()) * x.x4_1()))
        }
        5 => (x.x4_4() / x.x5_2()) * (one + x.x4_3() * x.x4_2() / (x.x5_2() * x.x5_1())),
        6 => {
            (Rational::one() / x.x6_3())
                * (one
                    + x.x4_4() * x.x4_3() / (x.x6_3() * x.x6_2())
                    + x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1() / (x.x6_3() * sq(x.x6_2()) * x.x6_1()))
        }
        _ => return Err(Error::InvalidNode { node: k, context: "epsilon on V1" }),
    };
    Ok(e)
}

pub fn gamma_v2(k: usize, y: &PointV2) -> Result<Rational> {
    let g = match k {
        0 => sq(y.y0_1()) / (y.y2_2() * y.y2_1()),
        2 => sq(y.y2_2()) * sq(y.y2_1()) / (y.y3_3() * y.y3_2() * y.y3_1() * y.y0_1()),
        3 => {
            sq(y.y3_3()) * sq(y.y3_2()) * sq(y.y3_1())
                / (y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1() * y.y2_2() * y.y2_1())
        }
        4 => {
            sq(y.y4_4()) * sq(y.y4_3()) * sq(y.y4_2()) * sq(y.y4_1())
                / (y.y6_2() * y.y6_1() * y.y5_3() * y.y5_2() * y.y5_1() * y.y3_3() * y.y3_2() * y.y3_1())
        }
        5 => {
            sq(y.y5_3()) * sq(y.y5_2()) * sq(y.y5_1()) / (y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1())
        }
        6 => sq(y.y6_2()) * sq(y.y6_1()) / (y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1()),
        _ => return Err(Error::InvalidNode { node: k, context: "gamma on V2" }),
    };
    Ok(g)
}

pub fn epsilon_v2(k: usize, y: &PointV2) -> Result<Rational> {
    let one = Rational::one();
    let e = match k {
        0 => y.y2_2() / y.y0_1(),
        2 => (y.y3_3() / y.y2_2()) * (one + y.y3_2() * y.y0_1() / (y.y2_2() * y.y2_1())),
        3 => {
            (y.y4_4() / y.y3_3())
                * (one
                    + y.y4_3() * y.y2_2() / (y.y3_3() * y.y3_2())
                    + y.y4_3() * y.y4_2() * y.y2_2() * y.y2_1() / (y.y3_3() * sq(y.y3_2()) * y.y3_1()))
        }
        4 => {
            (y.y5_3() / y.y4_4())
                * (one
                    + y.y6_2() * y.y3_3() / (y.y4_4() * y.y4_3())
                    + y.y6_2() * y.y5_2() * y.y3_3() * y.y3_2() / (y.y4_4() * sq(y.y4_3()) * y.y4_2())
                    + y.y6_2() * y.y6_1() * y.y5_2() * y.y3_3() * y.y3_2() * y.y3_1()
                        / (y.y4_4() * sq(y.y4_3()) * sq(y.y4_2()) * y.y4_1()))
        }
        5 => {
            (Rational::one() / y.y5_3())
                * (one
                    + y.y4_4() * y.y4_3() / (y.y5_3() * y.y5_2())
                    + y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1() / (y.y5_3() * sq(y.y5_2()) * y.y5_1()))
        }
        6 => (y.y4_4() / y.y6_2()) * (one + y.y4_3() * y.y4_2() / (y.y6_2() * y.y6_1())),
        _ => return Err(Error::InvalidNode { node: k, context: "epsilon on V2" }),
    };
    Ok(e)
}
