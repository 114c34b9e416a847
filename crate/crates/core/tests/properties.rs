use matconc_core::bounds::{
    c_p, c_p_closed_form, c_p_quadrature, khintchine_moment_bound, naive_aw_sum, rank_one_tail_bound, sigma,
    tail_bound,
};
use matconc_core::ensembles::{random_family, random_hermitian};
use matconc_core::spectral::{is_psd, lambda_max, lambda_min, DEFAULT_PSD_TOL};
use matconc_core::trace_ineq::{iterated_trace_power_gap, trotter_error};
use matconc_core::verifier::{
    exact_norm_moment, exact_rademacher_expectation, lemma2_gap_exact, mc_norm_moment, mc_tail_frequency, Statistic, STAT_MARGIN,
};
use matconc_core::{
    eigh, golden_thompson_gap, matrix_exp, operator_norm, psd_order_holds, schatten_norm, spectral_apply,
    trace_power_gap, CoefficientKind, HermitianMatrix, RngStream,
};
use proptest::prelude::*;

fn herm(seed: u64, dim: usize, scale: f64) -> HermitianMatrix {
    random_hermitian(&mut RngStream::new(seed, 0), dim).unwrap().scaled(scale)
}

fn psd(seed: u64, dim: usize, scale: f64) -> HermitianMatrix {
    herm(seed, dim, 1.0).square().scaled(scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectral_mapping(seed in any::<u64>(), dim in 1usize..7, scale in 0.1f64..3.0) {
        let a = herm(seed, dim, scale);
        let values = eigh(&a).unwrap().values().to_vec();
        let mapped = eigh(&matrix_exp(&a).unwrap()).unwrap().values().to_vec();
        for (l, e) in values.iter().zip(&mapped) {
            // exp is increasing, so the ascending orders line up.
            prop_assert!((l.exp() - e).abs() <= 1e-12 * (1.0 + e.abs()));
        }
        let cubed = spectral_apply(&a, |x| x * x * x).unwrap();
        let direct = a.matmul(&a).unwrap().matmul(a.as_square()).unwrap();
        let diff = cubed.as_square().sub(&direct).unwrap().max_abs();
        prop_assert!(diff <= 1e-12 * (1.0 + scale.powi(3)));
    }

    #[test]
    fn squares_are_psd(seed in any::<u64>(), dim in 1usize..7, scale in 0.1f64..5.0) {
        let a = herm(seed, dim, scale);
        prop_assert!(is_psd(&a.square(), DEFAULT_PSD_TOL).unwrap());
        prop_assert!(lambda_min(&a.square()).unwrap() >= -1e-12 * scale * scale);
    }

    #[test]
    fn order_is_preserved_by_addition(seed in any::<u64>(), dim in 1usize..6) {
        let a = herm(seed, dim, 2.0);
        let b = a.add(&psd(seed ^ 1, dim, 0.5)).unwrap();
        let c = herm(seed ^ 2, dim, 3.0);
        prop_assert!(psd_order_holds(&a, &b, DEFAULT_PSD_TOL).unwrap());
        prop_assert!(psd_order_holds(&a.add(&c).unwrap(), &b.add(&c).unwrap(), DEFAULT_PSD_TOL).unwrap());
    }

    #[test]
    fn trace_exp_is_monotone(seed in any::<u64>(), dim in 1usize..6) {
        let a = herm(seed, dim, 2.0);
        let b = a.add(&psd(seed ^ 7, dim, 1.0)).unwrap();
        let ta = matrix_exp(&a).unwrap().trace();
        let tb = matrix_exp(&b).unwrap().trace();
        prop_assert!(ta <= tb * (1.0 + 1e-12));
    }

    #[test]
    fn golden_thompson_holds(seed in any::<u64>(), dim in 1usize..7, sa in 0.0f64..3.0, sb in 0.0f64..3.0) {
        let gap = golden_thompson_gap(&herm(seed, dim, sa), &herm(seed ^ 3, dim, sb)).unwrap();
        prop_assert!(gap.holds(1e-10), "{gap:?}");
    }

    #[test]
    fn trotter_error_halves(seed in any::<u64>(), dim in 2usize..5) {
        let a = herm(seed, dim, 1.5);
        let b = herm(seed ^ 5, dim, 1.5);
        let e8 = trotter_error(&a, &b, 8).unwrap();
        let e16 = trotter_error(&a, &b, 16).unwrap();
        if (1e-8..=0.1).contains(&e8) {
            prop_assert!(e16 <= 0.75 * e8, "{e8} -> {e16}");
        }
    }

    #[test]
    fn trace_power_inequalities(seed in any::<u64>(), dim in 1usize..5, k in 0u32..4) {
        let x = psd(seed, dim, 1.2);
        let y = psd(seed ^ 9, dim, 0.8);
        let gap = trace_power_gap(&x, &y, k).unwrap();
        prop_assert!(gap.holds(1e-8), "{gap:?}");
        let iterated = iterated_trace_power_gap(&x, &y, k).unwrap();
        prop_assert!(iterated.holds(1e-8), "{iterated:?}");
    }

    #[test]
    fn schatten_norms_are_ordered(seed in any::<u64>(), dim in 1usize..6) {
        let a = herm(seed, dim, 2.0);
        let op = operator_norm(&a).unwrap();
        let mut prev = f64::INFINITY;
        for p in [1.0, 2.0, 4.0, 16.0] {
            let n = schatten_norm(&a, p).unwrap();
            prop_assert!(n <= prev * (1.0 + 1e-12));
            prop_assert!(n >= op * (1.0 - 1e-12));
            prev = n;
        }
        let frob = schatten_norm(&a, 2.0).unwrap();
        prop_assert!((frob - a.frobenius_norm()).abs() <= 1e-12 * (1.0 + frob));
    }

    #[test]
    fn sigma_squared_below_naive_sum(seed in any::<u64>(), dim in 1usize..5, n in 1usize..8) {
        let fam = random_family(&mut RngStream::new(seed, 0), dim, n).unwrap();
        let s = sigma(&fam).unwrap();
        prop_assert!(s * s <= naive_aw_sum(&fam).unwrap() * (1.0 + 1e-12));
        // λ_max(Σ A_i²) >= max ‖A_i‖² since every term is PSD.
        let biggest = fam.members().iter().map(|a| operator_norm(a).unwrap()).fold(0.0f64, f64::max);
        prop_assert!(s * s >= biggest * biggest * (1.0 - 1e-12));
    }

    #[test]
    fn lemma2_gap_is_even_in_s(seed in any::<u64>(), s in -2.0f64..2.0) {
        let fam = random_family(&mut RngStream::new(seed, 0), 2, 4).unwrap();
        let plus = lemma2_gap_exact(&fam, s).unwrap();
        let minus = lemma2_gap_exact(&fam, -s).unwrap();
        prop_assert!(plus.holds(1e-9));
        prop_assert!((plus.gap() - minus.gap()).abs() <= 1e-11 * (1.0 + plus.upper));
    }

    #[test]
    fn exact_moments_below_khintchine(seed in any::<u64>(), dim in 1usize..4, n in 1usize..8) {
        let fam = random_family(&mut RngStream::new(seed, 0), dim, n).unwrap();
        for p in [1.0, 2.0, 4.0] {
            prop_assert!(exact_norm_moment(&fam, p).unwrap() <= khintchine_moment_bound(&fam, p).unwrap());
        }
    }
}

#[test]
fn tail_bounds_decrease_in_t() {
    let mut prev_tail = f64::INFINITY;
    let mut prev_rank = f64::INFINITY;
    for i in 0..200 {
        let t = i as f64 * 0.05;
        let tail = tail_bound(t, 1.3, 4).unwrap();
        let rank = rank_one_tail_bound(t, 500, 2.0).unwrap();
        assert!(tail.value <= prev_tail && rank.value <= prev_rank);
        assert!(tail.effective() <= 1.0 && rank.effective() <= 1.0);
        prev_tail = tail.value;
        prev_rank = rank.value;
    }
}

#[test]
fn khintchine_bound_increases_in_p() {
    let fam = random_family(&mut RngStream::new(4, 0), 3, 5).unwrap();
    let mut prev = 0.0;
    for i in 0..40 {
        let b = khintchine_moment_bound(&fam, 1.0 + 0.5 * i as f64).unwrap();
        assert!(b > prev);
        prev = b;
    }
}

#[test]
fn c_p_routes_agree_and_grow_like_sqrt_p() {
    for i in 0..128 {
        let p = 1.0 + 63.0 * i as f64 / 127.0;
        let closed = c_p_closed_form(p).unwrap();
        let quad = c_p_quadrature(p).unwrap();
        assert!((closed - quad).abs() <= 1e-10 * closed, "p={p}");
        assert!(c_p(p).unwrap() <= 1.3 * p.sqrt(), "p={p}");
    }
}

#[test]
fn monte_carlo_matches_exact_enumeration() {
    // 10^5 trials against the exact 2^n average; agreement within the
    // statistical margin.
    let fam = random_family(&mut RngStream::new(12, 0), 2, 8).unwrap();
    for p in [1.0, 2.0, 4.0] {
        let exact = exact_norm_moment(&fam, p).unwrap();
        let mc = mc_norm_moment(&fam, CoefficientKind::Rademacher, p, 100_000, 31).unwrap();
        assert!(
            (mc.mean - exact).abs() <= STAT_MARGIN * mc.stderr,
            "p={p} exact={exact} mc={mc:?}"
        );
    }
    let t = 0.8 * sigma(&fam).unwrap();
    let exact = exact_rademacher_expectation(&fam, Statistic::TailIndicator { t }).unwrap();
    let mc = mc_tail_frequency(&fam, CoefficientKind::Rademacher, t, 100_000, 32).unwrap();
    assert!(exact > 0.0 && exact < 1.0);
    assert!((mc.mean - exact).abs() <= STAT_MARGIN * mc.stderr, "exact={exact} mc={mc:?}");
}

#[test]
fn monte_carlo_is_deterministic() {
    let fam = random_family(&mut RngStream::new(2, 0), 3, 4).unwrap();
    let a = mc_norm_moment(&fam, CoefficientKind::Gaussian, 2.0, 500, 77).unwrap();
    let b = mc_norm_moment(&fam, CoefficientKind::Gaussian, 2.0, 500, 77).unwrap();
    assert_eq!(a, b);
    let c = mc_norm_moment(&fam, CoefficientKind::Gaussian, 2.0, 500, 78).unwrap();
    assert_ne!(a.mean, c.mean);
}

#[test]
fn lambda_max_of_negation() {
    let a = herm(5, 5, 2.0);
    let top = lambda_max(&a.neg()).unwrap();
    assert!((top + lambda_min(&a).unwrap()).abs() < 1e-13);
}
