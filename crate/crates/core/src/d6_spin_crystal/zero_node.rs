//! The affine node: the K-family, the closed form of `e_0^c` on `𝒱_1`, and
//! the defining route `σ̄⁻¹ ∘ ē_6^c ∘ σ̄`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::closed_forms::act_e_v2;
use super::points::PointV1;
use super::sigma_bar::{sigma_bar, sigma_bar_inv};

/// `K` and its c-deformations `K_{3_1}, …, K_{6_2}` at a point and scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KFamily {
    pub k: Rational,
    pub k31: Rational,
    pub k32: Rational,
    pub k41: Rational,
    pub k42: Rational,
    pub k43: Rational,
    pub k51: Rational,
    pub k61: Rational,
    pub k62: Rational,
}

impl KFamily {
    pub fn entries(&self) -> [(&'static str, &Rational); 9] {
        [
            ("K", &self.k),
            ("K_3_1", &self.k31),
            ("K_3_2", &self.k32),
            ("K_4_1", &self.k41),
            ("K_4_2", &self.k42),
            ("K_4_3", &self.k43),
            ("K_5_1", &self.k51),
            ("K_6_1", &self.k61),
            ("K_6_2", &self.k62),
        ]
    }
}

/// The fourteen monomials of `K`, in the standard order.
pub fn k_monomials(x: &PointV1) -> [Rational; 14] {
    let (x21, x22) = (x.x2_1(), x.x2_2());
    let (x31, x32, x33) = (x.x3_1(), x.x3_2(), x.x3_3());
    let (x41, x42, x43, x44) = (x.x4_1(), x.x4_2(), x.x4_3(), x.x4_4());
    let (x51, x52) = (x.x5_1(), x.x5_2());
    let (x61, x62, x63) = (x.x6_1(), x.x6_2(), x.x6_3());
    [
        x61.clone(),
        x51 * x22 * x21 / (x33 * x32),
        x51 * x31 * x22 / (x42 * x33),
        x41 * x22 / x33,
        x51 * x32 * x31 / (x43 * x42),
        x41 * x32 / x43,
        x42 * x41 / x62,
        x22 * x21 / x63,
        x62 * x22 * x21 / (x44 * x43),
        x42 * x22 * x21 / (x44 * x32),
        x43 * x42 * x22 * x21 / (x52 * x33 * x32),
        x31 * x22 / x44,
        x43 * x31 * x22 / (x52 * x33),
        x32 * x31 / x52,
    ]
}

/// `Σ t_i`, with `c` on the 1-based term indices listed in `tagged`.
fn tagged_sum(t: &[Rational; 14], c: &Rational, tagged: &[usize]) -> Rational {
    let (mut with_c, mut plain) = (Rational::zero(), Rational::zero());
    for (i, ti) in t.iter().enumerate() {
        if tagged.contains(&(i + 1)) {
            with_c += ti;
        } else {
            plain += ti;
        }
    }
    c * with_c + plain
}

const ALL: [usize; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

fn all_but(skip: &[usize]) -> Vec<usize> {
    ALL.iter().copied().filter(|i| !skip.contains(i)).collect()
}

pub fn k_family(x: &PointV1, c: &Rational) -> KFamily {
    let t = k_monomials(x);
    let k = tagged_sum(&t, c, &[]);
    let k31 = tagged_sum(&t, c, &[1, 3, 4, 5, 6, 7, 12, 13, 14]);
    let k32 = tagged_sum(&t, c, &[1, 5, 6, 7, 14]);
    let k41 = tagged_sum(&t, c, &[1, 4, 6, 7]);
    let k43 = tagged_sum(&t, c, &[1, 2, 3, 4, 5, 6, 7, 11, 13, 14]);
    let k51 = tagged_sum(&t, c, &[1, 2, 3, 4, 5, 6, 7]);
    let k61 = tagged_sum(&t, c, &[1]);
    let k62 = tagged_sum(&t, c, &all_but(&[8]));

    // four bracketed sums weighted by c·t1, c·t7, t8, t9, plus a trailing (…)·K
    let b1 = tagged_sum(&t, c, &all_but(&[8, 9]));
    let b2 = tagged_sum(&t, c, &all_but(&[8]));
    let b3 = tagged_sum(&t, c, &[1, 7]);
    let b4 = tagged_sum(&t, c, &[1]);
    let tail = c * [2, 3, 4, 5, 6, 10, 11, 12, 13, 14].iter().map(|&i| &t[i - 1]).sum::<Rational>();
    let k42 = c * &t[0] * b1 + c * &t[6] * b2 + &t[7] * b3 + &t[8] * b4 + tail * &k;

    KFamily { k, k31, k32, k41, k42, k43, k51, k61, k62 }
}

/// `e_0^c(V_1(x))` via the closed-form x′ table.
pub fn act_e0_v1(c: &Rational, x: &PointV1) -> Result<PointV1> {
    if c.is_zero() {
        return Err(Error::domain("c must be nonzero"));
    }
    let f = k_family(x, c);
    if let Some((name, _)) = f.entries().into_iter().find(|(_, v)| v.is_zero()) {
        return Err(Error::domain(format!("{name} vanishes")));
    }
    let KFamily { k, k31, k32, k41, k42, k43, k51, k61, k62 } = &f;
    let ck = c * k;
    let inv_c = Rational::one() / c;

    let factors = [
        (PointV1::X1_1, inv_c.clone()),
        (PointV1::X2_1, inv_c.clone()),
        (PointV1::X2_2, inv_c),
        (PointV1::X3_1, k / k31),
        (PointV1::X3_2, k31 / (c * k32)),
        (PointV1::X3_3, k32 / &ck),
        (PointV1::X4_1, k / k41),
        (PointV1::X4_2, k * k41 / k42),
        (PointV1::X4_3, k42 / (&ck * k43)),
        (PointV1::X4_4, k43 / &ck),
        (PointV1::X5_1, k / k51),
        (PointV1::X5_2, k51 / &ck),
        (PointV1::X6_1, k / k61),
        (PointV1::X6_2, k61 / k62),
        (PointV1::X6_3, k62 / &ck),
    ];
    let mut out = x.clone();
    for (pos, f) in &factors {
        out.scale_at(*pos, f);
    }
    out.revalidate()
}

/// `e_0^c = σ̄⁻¹ ∘ ē_6^c ∘ σ̄`.
pub fn act_e0_via_sigma(c: &Rational, x: &PointV1) -> Result<PointV1> {
    let (y, _) = sigma_bar(x)?;
    sigma_bar_inv(&act_e_v2(6, c, &y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d6_spin_crystal::{epsilon_v1, epsilon_v2, gamma_v1, gamma_v2};
    use crate::exact_arith::{sample_positive, trial_rng};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn random_v1(trial: u64) -> (PointV1, Rational) {
        let mut rng = trial_rng(9, trial);
        let v: Vec<Rational> = (0..15).map(|_| sample_positive(&mut rng, 20)).collect();
        (PointV1::from_params(&v).unwrap(), sample_positive(&mut rng, 20))
    }

    #[test]
    fn all_ones_values() {
        let ones = PointV1::ones();
        for c in [r(1, 1), r(2, 1), r(3, 7)] {
            let f = k_family(&ones, &c);
            assert_eq!(f.k, r(14, 1));
            assert_eq!(f.k31, &c * r(9, 1) + r(5, 1));
            assert_eq!(f.k61, &c + r(13, 1));
            assert_eq!(f.k42, r(25, 1) * &c * &c + r(146, 1) * &c + r(25, 1));
        }
        let f = k_family(&ones, &Rational::one());
        for (_, v) in f.entries() {
            assert!(v == &r(14, 1) || v == &r(196, 1));
        }
    }

    #[test]
    fn c_one_is_identity() {
        let (x, _) = random_v1(0);
        assert_eq!(act_e0_v1(&Rational::one(), &x).unwrap(), x);
        assert_eq!(act_e0_via_sigma(&Rational::one(), &x).unwrap(), x);
    }

    #[test]
    fn first_row_scales_by_inverse_c() {
        let (x, c) = random_v1(1);
        let out = act_e0_v1(&c, &x).unwrap();
        assert_eq!(out.x1_1(), &(x.x1_1() / &c));
        assert_eq!(out.x2_1(), &(x.x2_1() / &c));
        assert_eq!(out.x2_2(), &(x.x2_2() / &c));
    }

    #[test]
    fn all_ones_c2() {
        let ones = PointV1::ones();
        let c = r(2, 1);
        let out = act_e0_via_sigma(&c, &ones).unwrap();
        assert_eq!(out.x1_1(), &r(1, 2));
        let closed = act_e0_v1(&c, &ones).unwrap();
        assert_eq!(out.x1_1(), closed.x1_1());
        assert_eq!(closed.x2_2() * closed.x2_1(), r(1, 4));
        assert_eq!(gamma_v1(0, &closed).unwrap(), r(4, 1) * gamma_v1(0, &ones).unwrap());
    }

    #[test]
    fn zero_data_matches_barred_node_six() {
        for trial in 0..5 {
            let (x, _) = random_v1(trial);
            let (y, _) = sigma_bar(&x).unwrap();
            assert_eq!(gamma_v1(0, &x).unwrap(), gamma_v2(6, &y).unwrap());
            assert_eq!(epsilon_v1(0, &x).unwrap(), epsilon_v2(6, &y).unwrap());
        }
    }

    #[test]
    fn k_family_positive() {
        for trial in 0..5 {
            let (x, c) = random_v1(trial);
            assert!(k_family(&x, &c).entries().iter().all(|(_, v)| v.is_positive()));
        }
    }
}
