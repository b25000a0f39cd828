//! The check catalog and one trial function per check.

use crate::d6_spin_crystal::{
    act_e0_v1, act_e0_via_sigma, act_e_v1, act_e_v2, epsilon_v1, epsilon_v2, gamma_v1, gamma_v2,
    k_family, sigma_bar, sigma_bar_inv, PointV1, PointV2, NODES_V1, NODES_V2,
};
use crate::exact_arith::Rational;
use crate::spin_module::{apply_sigma, build_v1, build_v2, cartan_entry, sigma_node, SpinBasis};
use crate::unipotent_crystal::{
    generic_act_e, generic_epsilon, generic_gamma, ParamTuple, WordCrystal, PRESET_V1, PRESET_V2,
};

use super::{check_eq, check_positive, CheckDef, Severity, Trial, TrialResult};

const ALL_NODES: [usize; 7] = [0, 1, 2, 3, 4, 5, 6];

macro_rules! check {
    ($name:literal, $sev:ident, $summary:literal, $run:expr) => {
        CheckDef { name: $name, severity: Severity::$sev, summary: $summary, inapplicable: None, run: $run }
    };
}

pub static CATALOG: [CheckDef; 20] = [
    check!("axiom_gamma_covariance", Asserted, "γ_j(e_i^c x) = c^{a_ij} γ_j(x) on V1, all i, j in 0..6", gamma_covariance_v1),
    check!("axiom_verma", Asserted, "Verma relations on V1 for every node pair of the affine diagram", verma_v1),
    check!("axiom_epsilon", Asserted, "ε_i(e_i^c x) = c^-1 ε_i(x); ε_i(e_j^c x) = ε_i(x) when a_ij = 0", epsilon_laws_v1),
    check!("action_law", Asserted, "e_i^1 = id and e_i^{c1} e_i^{c2} = e_i^{c1 c2} on V1", action_law_v1),
    check!("lemma_sigma_bar", Asserted, "V_2(σ̄(x)) = a(x) σ(V_1(x)) in all 32 coordinates", lemma_sigma_bar),
    check!("prop_inverse", Asserted, "σ̄^-1 σ̄ = id on V1 and σ̄ σ̄^-1 = id on V2", prop_inverse),
    check!("prop_intertwine_24", Asserted, "σ̄ e_2^c = ē_4^c σ̄", intertwine_24),
    check!("e0_two_routes", Asserted, "closed-form e_0^c equals σ̄^-1 ē_6^c σ̄", e0_two_routes),
    check!("closed_vs_generic_v1", Asserted, "V1 closed forms equal the word formulas, k = 1..6", closed_vs_generic_v1),
    check!("closed_vs_generic_v2", Asserted, "V2 closed forms equal the word formulas, k in {0,2,3,4,5,6}", closed_vs_generic_v2),
    check!("zero_node_consistency", Asserted, "γ_0 = γ̄_6 σ̄ and ε_0 = ε̄_6 σ̄ = K", zero_node_consistency),
    check!("theorem_relations", Asserted, "the five relations involving the 0-action", theorem_relations),
    check!("positivity_all", Asserted, "every operation maps positive inputs to positive outputs", positivity_all),
    check!("v2_axioms", Asserted, "geometric crystal axioms on V2 over {0,2,3,4,5,6}", v2_axioms),
    check!("spot_expansion", Asserted, "known coefficients of V_1(x) and V_2(y)", spot_expansion),
    check!("explore_sigma_intertwine_k1", Exploratory, "σ̄ e_1^c = ē_5^c σ̄", explore_k1),
    check!("explore_sigma_intertwine_k3", Exploratory, "σ̄ e_3^c = ē_3^c σ̄", explore_k3),
    check!("explore_sigma_intertwine_k4", Exploratory, "σ̄ e_4^c = ē_2^c σ̄", explore_k4),
    CheckDef {
        name: "explore_sigma_intertwine_k5",
        severity: Severity::Exploratory,
        summary: "σ̄ e_5^c = ē_1^c σ̄",
        inapplicable: Some("σ(5) = 1 is not a node of the V2 index set {0,2,3,4,5,6}; no ē_1 exists"),
        run: explore_k5,
    },
    check!("explore_sigma_intertwine_k6", Exploratory, "σ̄ e_6^c = ē_0^c σ̄", explore_k6),
];

fn cpow(c: &Rational, n: i32) -> Rational {
    c.pow(n).expect("c is positive")
}

fn gamma_covariance_v1(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c = t.scalar("c");
    for i in ALL_NODES {
        let moved = act_e_v1(i, &c, &x)?;
        for j in ALL_NODES {
            let lhs = gamma_v1(j, &moved)?;
            let rhs = cpow(&c, cartan_entry(i, j)) * gamma_v1(j, &x)?;
            check_eq(&format!("gamma_{j}(e_{i}^c x) = c^a_{i}{j} gamma_{j}(x)"), &lhs, &rhs)?;
        }
    }
    Ok(())
}

/// Verma relation for the pair `(i, j)` with a generic action `e`.
fn verma_pair<P, F>(e: &F, i: usize, j: usize, c1: &Rational, c2: &Rational, x: &P) -> TrialResult
where
    P: PartialEq + serde::Serialize,
    F: Fn(usize, &Rational, &P) -> crate::Result<P>,
{
    match cartan_entry(i, j) {
        0 => {
            let lhs = e(i, c1, &e(j, c2, x)?)?;
            let rhs = e(j, c2, &e(i, c1, x)?)?;
            check_eq(&format!("e_{i}^c1 e_{j}^c2 = e_{j}^c2 e_{i}^c1"), &lhs, &rhs)
        }
        -1 => {
            let c12 = c1 * c2;
            let lhs = e(i, c1, &e(j, &c12, &e(i, c2, x)?)?)?;
            let rhs = e(j, c2, &e(i, &c12, &e(j, c1, x)?)?)?;
            check_eq(&format!("e_{i}^c1 e_{j}^c1c2 e_{i}^c2 = e_{j}^c2 e_{i}^c1c2 e_{j}^c1"), &lhs, &rhs)
        }
        a => unreachable!("simply laced off-diagonal entry {a}"),
    }
}

fn verma_v1(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c1 = t.scalar("c1");
    let c2 = t.scalar("c2");
    for i in ALL_NODES {
        for j in ALL_NODES.into_iter().filter(|&j| j > i) {
            verma_pair(&act_e_v1, i, j, &c1, &c2, &x)?;
        }
    }
    Ok(())
}

fn epsilon_laws_v1(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c = t.scalar("c");
    for i in ALL_NODES {
        let lhs = epsilon_v1(i, &act_e_v1(i, &c, &x)?)?;
        let rhs = epsilon_v1(i, &x)? / &c;
        check_eq(&format!("eps_{i}(e_{i}^c x) = c^-1 eps_{i}(x)"), &lhs, &rhs)?;
        for j in ALL_NODES.into_iter().filter(|&j| j != i && cartan_entry(i, j) == 0) {
            let lhs = epsilon_v1(i, &act_e_v1(j, &c, &x)?)?;
            check_eq(&format!("eps_{i}(e_{j}^c x) = eps_{i}(x)"), &lhs, &epsilon_v1(i, &x)?)?;
        }
    }
    Ok(())
}

fn action_law_v1(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c1 = t.scalar("c1");
    let c2 = t.scalar("c2");
    for i in ALL_NODES {
        check_eq(&format!("e_{i}^1 x = x"), &act_e_v1(i, &Rational::one(), &x)?, &x)?;
        let lhs = act_e_v1(i, &c1, &act_e_v1(i, &c2, &x)?)?;
        let rhs = act_e_v1(i, &(&c1 * &c2), &x)?;
        check_eq(&format!("e_{i}^c1 e_{i}^c2 = e_{i}^c1c2"), &lhs, &rhs)?;
    }
    Ok(())
}

fn lemma_sigma_bar(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let (y, a) = sigma_bar(&x)?;
    let lhs = build_v2(&y)?;
    let rhs = apply_sigma(&build_v1(&x)?).scale(&a);
    check_eq("V_2(sigma_bar(x)) = a(x) sigma(V_1(x))", &lhs, &rhs)
}

fn prop_inverse(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let y = t.point_v2("y");
    check_eq("sigma_bar_inv(sigma_bar(x)) = x", &sigma_bar_inv(&sigma_bar(&x)?.0)?, &x)?;
    check_eq("sigma_bar(sigma_bar_inv(y)) = y", &sigma_bar(&sigma_bar_inv(&y)?)?.0, &y)
}

/// `σ̄(e_k^c x) = ē_{σ(k)}^c σ̄(x)`.
fn intertwine(t: &mut Trial, k: usize) -> TrialResult {
    let x = t.point_v1("x");
    let c = t.scalar("c");
    let lhs = sigma_bar(&act_e_v1(k, &c, &x)?)?.0;
    let rhs = act_e_v2(sigma_node(k), &c, &sigma_bar(&x)?.0)?;
    check_eq(&format!("sigma_bar e_{k}^c = e_bar_{}^c sigma_bar", sigma_node(k)), &lhs, &rhs)
}

fn intertwine_24(t: &mut Trial) -> TrialResult {
    intertwine(t, 2)
}

fn explore_k1(t: &mut Trial) -> TrialResult {
    intertwine(t, 1)
}

fn explore_k3(t: &mut Trial) -> TrialResult {
    intertwine(t, 3)
}

fn explore_k4(t: &mut Trial) -> TrialResult {
    intertwine(t, 4)
}

fn explore_k5(t: &mut Trial) -> TrialResult {
    intertwine(t, 5)
}

fn explore_k6(t: &mut Trial) -> TrialResult {
    intertwine(t, 6)
}

fn e0_two_routes(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c = t.scalar("c");
    check_eq("closed-form e_0^c x = sigma_bar_inv e_bar_6^c sigma_bar x", &act_e0_v1(&c, &x)?, &act_e0_via_sigma(&c, &x)?)
}

fn closed_vs_generic_v1(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c = t.scalar("c");
    let wc = WordCrystal::preset(PRESET_V1)?;
    let p = ParamTuple::new(x.to_params())?;
    for k in NODES_V1 {
        let closed = act_e_v1(k, &c, &x)?.to_params();
        check_eq(&format!("e_{k}^c closed = generic"), &closed, &generic_act_e(&wc, &p, k, &c)?.into_values())?;
        check_eq(&format!("gamma_{k} closed = generic"), &gamma_v1(k, &x)?, &generic_gamma(&wc, &p, k)?)?;
        check_eq(&format!("eps_{k} closed = generic"), &epsilon_v1(k, &x)?, &generic_epsilon(&wc, &p, k)?)?;
    }
    Ok(())
}

fn closed_vs_generic_v2(t: &mut Trial) -> TrialResult {
    let y = t.point_v2("y");
    let c = t.scalar("c");
    let wc = WordCrystal::preset(PRESET_V2)?;
    let p = ParamTuple::new(y.to_params())?;
    for k in NODES_V2 {
        let closed = act_e_v2(k, &c, &y)?.to_params();
        check_eq(&format!("e_bar_{k}^c closed = generic"), &closed, &generic_act_e(&wc, &p, k, &c)?.into_values())?;
        check_eq(&format!("gamma_bar_{k} closed = generic"), &gamma_v2(k, &y)?, &generic_gamma(&wc, &p, k)?)?;
        check_eq(&format!("eps_bar_{k} closed = generic"), &epsilon_v2(k, &y)?, &generic_epsilon(&wc, &p, k)?)?;
    }
    Ok(())
}

fn zero_node_consistency(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let (y, _) = sigma_bar(&x)?;
    check_eq("gamma_0(x) = gamma_bar_6(sigma_bar x)", &gamma_v1(0, &x)?, &gamma_v2(6, &y)?)?;
    check_eq("eps_0(x) = eps_bar_6(sigma_bar x)", &epsilon_v1(0, &x)?, &epsilon_v2(6, &y)?)?;
    check_eq("eps_0(x) = K", &epsilon_v1(0, &x)?, &k_family(&x, &Rational::one()).k)
}

fn theorem_relations(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let c1 = t.scalar("c1");
    let c2 = t.scalar("c2");
    let e0x = act_e0_v1(&c1, &x)?;
    for k in ALL_NODES {
        let lhs = gamma_v1(0, &act_e_v1(k, &c1, &x)?)?;
        let rhs = cpow(&c1, cartan_entry(k, 0)) * gamma_v1(0, &x)?;
        check_eq(&format!("(1) gamma_0(e_{k}^c x) = c^a_{k}0 gamma_0(x)"), &lhs, &rhs)?;
        let lhs = gamma_v1(k, &e0x)?;
        let rhs = cpow(&c1, cartan_entry(0, k)) * gamma_v1(k, &x)?;
        check_eq(&format!("(2) gamma_{k}(e_0^c x) = c^a_0{k} gamma_{k}(x)"), &lhs, &rhs)?;
    }
    check_eq("(3) eps_0(e_0^c x) = c^-1 eps_0(x)", &epsilon_v1(0, &e0x)?, &(epsilon_v1(0, &x)? / &c1))?;
    for k in [1, 3, 4, 5, 6] {
        let lhs = act_e0_v1(&c1, &act_e_v1(k, &c2, &x)?)?;
        let rhs = act_e_v1(k, &c2, &e0x)?;
        check_eq(&format!("(4) e_0^c1 e_{k}^c2 = e_{k}^c2 e_0^c1"), &lhs, &rhs)?;
    }
    let c12 = &c1 * &c2;
    let lhs = act_e0_v1(&c1, &act_e_v1(2, &c12, &act_e0_v1(&c2, &x)?)?)?;
    let rhs = act_e_v1(2, &c2, &act_e0_v1(&c12, &act_e_v1(2, &c1, &x)?)?)?;
    check_eq("(5) e_0^c1 e_2^c1c2 e_0^c2 = e_2^c2 e_0^c1c2 e_2^c1", &lhs, &rhs)
}

fn positivity_all(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let y = t.point_v2("y");
    let c = t.scalar("c");
    for k in ALL_NODES {
        let p = act_e_v1(k, &c, &x)?;
        check_positive(&format!("e_{k}^c x"), p.is_positive(), &p)?;
        let g = gamma_v1(k, &x)?;
        check_positive(&format!("gamma_{k}(x)"), g.is_positive(), &g)?;
        let e = epsilon_v1(k, &x)?;
        check_positive(&format!("eps_{k}(x)"), e.is_positive(), &e)?;
    }
    let via = act_e0_via_sigma(&c, &x)?;
    check_positive("sigma_bar_inv e_bar_6^c sigma_bar x", via.is_positive(), &via)?;
    for k in NODES_V2 {
        let q = act_e_v2(k, &c, &y)?;
        check_positive(&format!("e_bar_{k}^c y"), q.is_positive(), &q)?;
        let g = gamma_v2(k, &y)?;
        check_positive(&format!("gamma_bar_{k}(y)"), g.is_positive(), &g)?;
        let e = epsilon_v2(k, &y)?;
        check_positive(&format!("eps_bar_{k}(y)"), e.is_positive(), &e)?;
    }
    let (sy, a) = sigma_bar(&x)?;
    check_positive("sigma_bar(x)", sy.is_positive(), &sy)?;
    check_positive("a(x)", a.is_positive(), &a)?;
    let sx = sigma_bar_inv(&y)?;
    check_positive("sigma_bar_inv(y)", sx.is_positive(), &sx)?;
    for (name, v) in k_family(&x, &c).entries() {
        check_positive(name, v.is_positive(), v)?;
    }
    let v1 = build_v1(&x)?;
    check_positive("V_1(x) coefficients", v1.support_len() == 32 && v1.iter().all(|(_, r)| r.is_positive()), &v1)?;
    let v2 = build_v2(&y)?;
    check_positive("V_2(y) coefficients", v2.support_len() == 32 && v2.iter().all(|(_, r)| r.is_positive()), &v2)?;
    Ok(())
}

fn v2_axioms(t: &mut Trial) -> TrialResult {
    let y = t.point_v2("y");
    let c1 = t.scalar("c1");
    let c2 = t.scalar("c2");
    for i in NODES_V2 {
        let moved = act_e_v2(i, &c1, &y)?;
        for j in NODES_V2 {
            let lhs = gamma_v2(j, &moved)?;
            let rhs = cpow(&c1, cartan_entry(i, j)) * gamma_v2(j, &y)?;
            check_eq(&format!("gamma_bar_{j}(e_bar_{i}^c y) = c^a_{i}{j} gamma_bar_{j}(y)"), &lhs, &rhs)?;
            if j > i {
                verma_pair(&act_e_v2, i, j, &c1, &c2, &y)?;
            }
            if j != i && cartan_entry(i, j) == 0 {
                check_eq(&format!("eps_bar_{i}(e_bar_{j}^c y) = eps_bar_{i}(y)"), &epsilon_v2(i, &act_e_v2(j, &c1, &y)?)?, &epsilon_v2(i, &y)?)?;
            }
        }
        check_eq(&format!("eps_bar_{i}(e_bar_{i}^c y) = c^-1 eps_bar_{i}(y)"), &epsilon_v2(i, &moved)?, &(epsilon_v2(i, &y)? / &c1))?;
        check_eq(&format!("e_bar_{i}^1 y = y"), &act_e_v2(i, &Rational::one(), &y)?, &y)?;
        let lhs = act_e_v2(i, &c1, &act_e_v2(i, &c2, &y)?)?;
        check_eq(&format!("e_bar_{i}^c1 e_bar_{i}^c2 = e_bar_{i}^c1c2"), &lhs, &act_e_v2(i, &(&c1 * &c2), &y)?)?;
    }
    Ok(())
}

/// Printed coefficients of `V_1(x)` with a clean closed form.
pub fn spot_coefficients_v1(x: &PointV1) -> Vec<(&'static str, Rational)> {
    vec![
        ("++++++", x.x6_3() * x.x6_2() * x.x6_1()),
        ("------", Rational::one()),
        (
            "++++--",
            x.x6_2() * x.x6_1()
                + x.x4_4() * x.x4_3() * x.x6_1() / x.x6_3()
                + x.x4_4() * x.x4_3() * x.x4_2() * x.x4_1() / (x.x6_3() * x.x6_2()),
        ),
        ("----++", x.x6_3().clone()),
        ("+----+", x.x1_1().clone()),
        ("---+-+", x.x4_4().clone()),
        ("--+--+", x.x3_3().clone()),
        ("---++-", x.x5_2().clone()),
        ("-+---+", x.x2_2().clone()),
        ("-++++-", x.x5_2() * x.x5_1()),
        ("--++++", x.x6_3() * x.x6_2()),
    ]
}

/// Printed coefficients of `V_2(y)` with a clean closed form.
pub fn spot_coefficients_v2(y: &PointV2) -> Vec<(&'static str, Rational)> {
    vec![
        ("-++++-", y.y5_3() * y.y5_2() * y.y5_1()),
        ("+----+", Rational::one()),
        ("------", y.y0_1().clone()),
        ("+---+-", y.y5_3().clone()),
        ("+--+--", y.y4_4().clone()),
        ("+-+---", y.y3_3().clone()),
        ("+--+++", y.y6_2().clone()),
        ("++----", y.y2_2().clone()),
        ("++++++", y.y6_2() * y.y6_1()),
        ("+-+++-", y.y5_3() * y.y5_2()),
        (
            "-+++-+",
            y.y5_2() * y.y5_1()
                + y.y4_4() * y.y4_3() * y.y5_1() / y.y5_3()
                + y.y4_4() * y.y4_3() * y.y4_2() * y.y4_1() / (y.y5_3() * y.y5_2()),
        ),
    ]
}

fn spot_expansion(t: &mut Trial) -> TrialResult {
    let x = t.point_v1("x");
    let y = t.point_v2("y");
    let v1 = build_v1(&x)?;
    for (signs, expected) in spot_coefficients_v1(&x) {
        let b: SpinBasis = signs.parse()?;
        check_eq(&format!("coefficient of {signs} in V_1(x)"), &v1.get(b), &expected)?;
    }
    let v2 = build_v2(&y)?;
    for (signs, expected) in spot_coefficients_v2(&y) {
        let b: SpinBasis = signs.parse()?;
        check_eq(&format!("coefficient of {signs} in V_2(y)"), &v2.get(b), &expected)?;
    }
    Ok(())
}
