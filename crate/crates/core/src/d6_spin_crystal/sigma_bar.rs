//! The birational twist `σ̄: 𝒱_1 → 𝒱_2` solving `V_2(y) = a(x)·σ(V_1(x))`,
//! and its inverse. Coordinates are monomials times ratios of bracketed sums.

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

use super::points::{PointV1, PointV2};

fn inv(s: &Rational, what: &str) -> Result<Rational> {
    s.recip().map_err(|_| Error::domain(format!("sum {what} vanishes")))
}

fn sq(r: &Rational) -> Rational {
    r * r
}

/// `σ̄(x) = (y, a(x))` with `a(x) = 1/(x_5^(2) x_5^(1))`.
pub fn sigma_bar(x: &PointV1) -> Result<(PointV2, Rational)> {
    let (x11, x21, x22) = (x.x1_1(), x.x2_1(), x.x2_2());
    let (x31, x32, x33) = (x.x3_1(), x.x3_2(), x.x3_3());
    let (x41, x42, x43, x44) = (x.x4_1(), x.x4_2(), x.x4_3(), x.x4_4());
    let (x51, x52) = (x.x5_1(), x.x5_2());
    let (x61, x62, x63) = (x.x6_1(), x.x6_2(), x.x6_3());

    let x5sq = sq(x52) * sq(x51);
    let a = Rational::one() / (x52 * x51);

    let y01 = x63 * x62 * x61 / (x52 * x51);
    let y61 = Rational::one() / x52;
    let y62 = Rational::one() / x51;

    let s2 = x52 * x51 / (x63 * x62)
        + x61 * x52 * x51 / (x63 * x42 * x41)
        + x62 * x61 * x52 * x51 / (x44 * x43 * x42 * x41);
    let y21 = inv(&s2, "in y_2")?;
    let y22 = x44 * x43 * x42 * x41 / &x5sq * &s2;

    let s3a = x52 * x51 / (x63 * x42)
        + x62 * x52 * x51 / (x44 * x43 * x42)
        + x52 * x41 / (x63 * x31)
        + x62 * x52 * x41 / (x44 * x43 * x31)
        + x52 * x42 * x41 / (x44 * x32 * x31)
        + x43 * x42 * x41 / (x33 * x32 * x31);
    let s3b = x33 * x32 * x31 / (x44 * x43 * x42)
        + x41 * x33 * x32 / (x51 * x44 * x43)
        + x42 * x41 * x33 / (x62 * x51 * x44)
        + x61 * x33 / (x51 * x44)
        + x43 * x42 * x41 / (x62 * x52 * x51)
        + x61 * x43 / (x52 * x51);
    let y31 = inv(&s3a, "in y_3^(1)")?;
    let y32 = x33 * x32 * x31 / &x5sq * &s3a * inv(&s3b, "in y_3^(2)")?;
    let y33 = s3b;

    let s4a = x52 / x63
        + x62 * x52 / (x44 * x43)
        + x52 * x42 / (x44 * x32)
        + x43 * x42 / (x33 * x32)
        + x52 * x31 / (x44 * x21)
        + x43 * x31 / (x33 * x21)
        + x32 * x31 / (x22 * x21);
    let s4b = x22 * x21 / (x51 * x44 * x32)
        + x43 * x22 * x21 / (x52 * x51 * x33 * x32)
        + x31 * x22 / (x51 * x44 * x42)
        + x43 * x31 * x22 / (x52 * x51 * x42 * x33)
        + x41 * x22 / (sq(x51) * x44)
        + x43 * x41 * x22 / (x52 * sq(x51) * x33)
        + x32 * x31 / (x52 * x51 * x42)
        + x41 * x32 / (x52 * sq(x51));
    let s4c = x22 * x21 / (x33 * x32)
        + x31 * x22 / (x42 * x33)
        + x41 * x22 / (x51 * x33)
        + x32 * x31 / (x43 * x42)
        + x41 * x32 / (x51 * x43)
        + x42 * x41 / (x62 * x51)
        + x61 / x51;
    let y41 = inv(&s4a, "in y_4^(1)")?;
    let y42 = x22 * x21 / &x5sq * &s4a * inv(&s4b, "in y_4^(2)")?;
    let y43 = &s4b * inv(&s4c, "in y_4^(3)")?;
    let y44 = s4c;

    let s5a = x52 / x44 + x43 / x33 + x32 / x22 + x21 / x11;
    let s5b = x11 / x22 + x21 / x32 + x31 / x42 + x41 / x51;
    let y51 = inv(&s5a, "in y_5^(1)")?;
    let y52 = x11 / (x52 * x51) * &s5a * inv(&s5b, "in y_5^(2)")?;
    let y53 = s5b;

    let y = PointV2::new([y53, y44, y33, y22, y62, y43, y32, y52, y42, y61, y01, y21, y31, y41, y51])?;
    Ok((y, a))
}

/// `σ̄⁻¹(y)`.
pub fn sigma_bar_inv(y: &PointV2) -> Result<PointV1> {
    let (y01, y21, y22) = (y.y0_1(), y.y2_1(), y.y2_2());
    let (y31, y32, y33) = (y.y3_1(), y.y3_2(), y.y3_3());
    let (y41, y42, y43, y44) = (y.y4_1(), y.y4_2(), y.y4_3(), y.y4_4());
    let (y51, y52, y53) = (y.y5_1(), y.y5_2(), y.y5_3());
    let (y61, y62) = (y.y6_1(), y.y6_2());

    let y6sq = sq(y62) * sq(y61);

    let x11 = y53 * y52 * y51 / (y62 * y61);
    let x51 = Rational::one() / y62;
    let x52 = Rational::one() / y61;

    let s2 = y62 * y61 / (y53 * y52)
        + y62 * y61 * y51 / (y53 * y42 * y41)
        + y62 * y61 * y52 * y51 / (y44 * y43 * y42 * y41);
    let x21 = inv(&s2, "in x_2")?;
    let x22 = y44 * y43 * y42 * y41 / &y6sq * &s2;

    let s3a = y62 * y61 / (y53 * y42)
        + y62 * y61 * y52 / (y44 * y43 * y42)
        + y62 * y41 / (y53 * y31)
        + y62 * y52 * y41 / (y44 * y43 * y31)
        + y62 * y42 * y41 / (y44 * y32 * y31)
        + y43 * y42 * y41 / (y33 * y32 * y31);
    let s3b = y33 * y32 * y31 / (y44 * y43 * y42)
        + y41 * y33 * y32 / (y61 * y44 * y43)
        + y42 * y41 * y33 / (y61 * y52 * y44)
        + y51 * y33 / (y61 * y44)
        + y43 * y42 * y41 / (y62 * y61 * y52)
        + y51 * y43 / (y62 * y61);
    let x31 = inv(&s3a, "in x_3^(1)")?;
    let x32 = y33 * y32 * y31 / &y6sq * &s3a * inv(&s3b, "in x_3^(2)")?;
    let x33 = s3b;

    let s4a = y62 / y53
        + y62 * y52 / (y44 * y43)
        + y62 * y42 / (y44 * y32)
        + y43 * y42 / (y33 * y32)
        + y62 * y31 / (y44 * y21)
        + y43 * y31 / (y33 * y21)
        + y32 * y31 / (y22 * y21);
    let s4b = y22 * y21 / (y61 * y44 * y32)
        + y43 * y22 * y21 / (y62 * y61 * y33 * y32)
        + y31 * y22 / (y61 * y44 * y42)
        + y43 * y31 * y22 / (y62 * y61 * y42 * y33)
        + y41 * y22 / (sq(y61) * y44)
        + y43 * y41 * y22 / (y62 * sq(y61) * y33)
        + y32 * y31 / (y62 * y61 * y42)
        + y41 * y32 / (y62 * sq(y61));
    let s4c = y22 * y21 / (y33 * y32)
        + y31 * y22 / (y42 * y33)
        + y41 * y22 / (y61 * y33)
        + y32 * y31 / (y43 * y42)
        + y41 * y32 / (y61 * y43)
        + y42 * y41 / (y61 * y52)
        + y51 / y61;
    let x41 = inv(&s4a, "in x_4^(1)")?;
    let x42 = y22 * y21 / &y6sq * &s4a * inv(&s4b, "in x_4^(2)")?;
    let x43 = &s4b * inv(&s4c, "in x_4^(3)")?;
    let x44 = s4c;

    let s6a = y62 / y44 + y43 / y33 + y32 / y22 + y21 / y01;
    let s6b = y01 / y22 + y21 / y32 + y31 / y42 + y41 / y61;
    let x61 = inv(&s6a, "in x_6^(1)")?;
    let x62 = y01 / (y62 * y61) * &s6a * inv(&s6b, "in x_6^(2)")?;
    let x63 = s6b;

    PointV1::new([x63, x44, x33, x22, x52, x43, x32, x62, x42, x51, x11, x21, x31, x41, x61])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{sample_positive, trial_rng};
    use crate::spin_module::{apply_sigma, build_v1, build_v2};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn random_v1(trial: u64) -> PointV1 {
        let mut rng = trial_rng(5, trial);
        let v: Vec<Rational> = (0..15).map(|_| sample_positive(&mut rng, 20)).collect();
        PointV1::from_params(&v).unwrap()
    }

    fn all_ones_image() -> PointV2 {
        let vals = [
            r(4, 1), r(7, 1), r(6, 1), r(3, 1), r(1, 1), r(8, 7), r(1, 1), r(1, 1),
            r(7, 8), r(1, 1), r(1, 1), r(1, 3), r(1, 6), r(1, 7), r(1, 4),
        ];
        PointV2::new(vals).unwrap()
    }

    #[test]
    fn all_ones_image_and_a() {
        let (y, a) = sigma_bar(&PointV1::ones()).unwrap();
        assert_eq!(a, Rational::one());
        assert_eq!(y, all_ones_image());
        assert_eq!(sigma_bar_inv(&y).unwrap(), PointV1::ones());
    }

    #[test]
    fn all_ones_image_solves_vector_equation() {
        let lhs = build_v2(&all_ones_image()).unwrap();
        let rhs = apply_sigma(&build_v1(&PointV1::ones()).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_coordinates() {
        let x = random_v1(0);
        let (y, a) = sigma_bar(&x).unwrap();
        assert_eq!(a, Rational::one() / (x.x5_2() * x.x5_1()));
        assert_eq!(y.y6_1(), &(Rational::one() / x.x5_2()));
        assert_eq!(y.y6_2(), &(Rational::one() / x.x5_1()));
        assert_eq!(y.y0_1(), &(x.x6_3() * x.x6_2() * x.x6_1() / (x.x5_2() * x.x5_1())));
        let back = sigma_bar_inv(&y).unwrap();
        assert_eq!(back.x5_1(), &(Rational::one() / y.y6_2()));
        assert_eq!(back.x1_1(), &(y.y5_3() * y.y5_2() * y.y5_1() / (y.y6_2() * y.y6_1())));
    }

    #[test]
    fn vector_identity_and_round_trip() {
        for trial in 0..8 {
            let x = random_v1(trial);
            let (y, a) = sigma_bar(&x).unwrap();
            let lhs = build_v2(&y).unwrap();
            let rhs = apply_sigma(&build_v1(&x).unwrap()).scale(&a);
            assert_eq!(lhs, rhs, "trial {trial}");
            assert_eq!(sigma_bar_inv(&y).unwrap(), x);
            assert_eq!(sigma_bar(&sigma_bar_inv(&y).unwrap()).unwrap().0, y);
        }
    }

    #[test]
    fn telescoping_products_at_all_ones() {
        let (y, _) = sigma_bar(&PointV1::ones()).unwrap();
        let one = Rational::one();
        assert_eq!(y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1(), one);
        assert_eq!(y.y5_3() * y.y5_2() * y.y5_1(), one);
        assert_eq!(y.y2_2() * y.y2_1(), one);
        assert_eq!(y.y3_3() * y.y3_2() * y.y3_1(), one);
    }

    #[test]
    fn vanishing_sum_is_domain_error() {
        // s5a = x52/x44 + x43/x33 + x32/x22 + x21/x11 = 1 + 1 + 1 - 3
        let mut v = PointV1::ones().to_params();
        v[PointV1::X1_1] = r(-1, 3);
        let x = PointV1::from_params(&v).unwrap();
        assert!(matches!(sigma_bar(&x), Err(Error::Domain(_))));
    }
}
