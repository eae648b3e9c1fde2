use monideal_core::decomp::{ass_primes, intersect, irreducible_decomposition, min_primes};
use monideal_core::polymatroid::{is_polymatroidal, is_veronese_type, transversal, veronese_type};
use monideal_core::resolution::{betti, has_linear_resolution, regularity, taylor_betti};
use monideal_core::{ExponentBounds, Monomial, MonomialIdeal, MonomialPrime, VarSet};
use proptest::prelude::*;

const P: u32 = 32003;

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

/// Proper nonzero ideals in 1 to 4 variables, exponents at most 3.
fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(exps(n, 3), 1..=6)))
        .prop_map(|(n, gens)| MonomialIdeal::from_exponents(n, gens).unwrap())
        .prop_filter("proper", |i| !i.is_unit())
}

fn ideal_with_monomial() -> impl Strategy<Value = (MonomialIdeal, Monomial)> {
    ideal().prop_flat_map(|i| {
        let n = i.nvars();
        (Just(i), exps(n, 5).prop_map(Monomial::new))
    })
}

fn ideal_with_prime() -> impl Strategy<Value = (MonomialIdeal, MonomialPrime)> {
    ideal().prop_flat_map(|i| {
        let n = i.nvars();
        (Just(i), (1u64..(1 << n)).prop_map(move |b| MonomialPrime::new(n, VarSet::from_bits(b)).unwrap()))
    })
}

/// All monomials with exponents componentwise at most `bound`.
fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out.into_iter().flat_map(|e: Vec<u32>| (0..=b).map(move |k| [e.clone(), vec![k]].concat())).collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn plus_one(m: &Monomial) -> Vec<u32> {
    m.exponents().iter().map(|e| e + 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normalization_is_idempotent(i in ideal()) {
        let again = MonomialIdeal::new(i.nvars(), i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for w in i.gens().windows(2) {
            prop_assert!(w[0] > w[1]);
        }
        for u in i.gens() {
            for v in i.gens() {
                prop_assert!(u == v || !u.divides(v));
            }
        }
    }

    #[test]
    fn membership_matches_divisor_scan((i, m) in ideal_with_monomial()) {
        let brute = i.gens().iter().any(|g| g.exponents().iter().zip(m.exponents()).all(|(a, b)| a <= b));
        prop_assert_eq!(i.contains(&m).unwrap(), brute);
    }

    #[test]
    fn colon_characterization((i, m) in ideal_with_monomial()) {
        let c = i.colon_monomial(&m).unwrap();
        for f in box_monomials(&plus_one(&i.lcm())) {
            let fm = f.checked_mul(&m, u32::MAX).unwrap();
            prop_assert_eq!(c.contains(&f).unwrap(), i.contains(&fm).unwrap());
        }
    }

    #[test]
    fn localization_routes_agree((i, p) in ideal_with_prime()) {
        let l = i.localize(&p).unwrap();
        prop_assert_eq!(&l, &i.localize_via_saturation(&p).unwrap());
        prop_assert!(l.support().is_subset(p.vars()));
        prop_assert!(i.is_subideal_of(&l).unwrap());
    }

    #[test]
    fn nested_localization((i, p) in ideal_with_prime(), bits in 1u64..16) {
        let n = i.nvars();
        let q_vars = VarSet::from_bits(bits & VarSet::full(n).bits());
        prop_assume!(!q_vars.is_empty());
        let q = MonomialPrime::new(n, q_vars).unwrap();
        let meet = p.vars().intersection(q_vars);
        let twice = i.localize(&p).unwrap().localize(&q).unwrap();
        if meet.is_empty() {
            prop_assert!(twice.is_unit());
        } else {
            prop_assert_eq!(twice, i.localize(&MonomialPrime::new(n, meet).unwrap()).unwrap());
        }
    }

    #[test]
    fn saturation_by_a_variable(i in ideal(), k in 0usize..4) {
        let k = k % i.nvars();
        let s = i.saturate_var(k).unwrap();
        prop_assert_eq!(&s.saturate_var(k).unwrap(), &s);
        prop_assert_eq!(s.support().contains(k), false);
        if i.nvars() > 1 {
            let rest = MonomialPrime::complement_of(i.nvars(), VarSet::singleton(k)).unwrap();
            prop_assert_eq!(&s, &i.localize(&rest).unwrap());
        }
    }

    #[test]
    fn graded_saturation_is_a_fixed_point(i in ideal()) {
        let s = i.saturate_graded().unwrap();
        prop_assert!(i.is_subideal_of(&s).unwrap());
        let m = MonomialIdeal::maximal_power(i.nvars(), 1);
        // (s : m) = s, checked generator by generator
        let colon = m.gens().iter().map(|x| s.colon_monomial(x)).reduce(|a, b| intersect(&a?, &b?)).unwrap().unwrap();
        prop_assert_eq!(colon, s);
    }

    #[test]
    fn power_degrees(i in ideal(), k in 1u32..=3) {
        let pk = i.power(k).unwrap();
        if let Some(d) = i.equigenerated_degree() {
            prop_assert_eq!(pk.equigenerated_degree(), Some(d * k));
        }
        prop_assert_eq!(pk.gens().iter().map(Monomial::degree).min(), i.gens().iter().map(|g| g.degree() * k).min());
    }

    #[test]
    fn decomposition_reassembles(i in ideal()) {
        let comps = irreducible_decomposition(&i).unwrap();
        let back = comps.iter().map(|c| c.to_ideal()).reduce(|a, b| intersect(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(back, i.clone());
        let ass = ass_primes(&i).unwrap();
        let minimal: Vec<_> = ass.iter().filter(|p| !ass.iter().any(|q| q != *p && q.is_subset(p))).copied().collect();
        let mut mins = min_primes(&i).unwrap();
        mins.sort();
        let mut minimal = minimal;
        minimal.sort();
        prop_assert_eq!(mins, minimal);
    }

    #[test]
    fn regularity_bounds(i in ideal()) {
        let r = regularity(&i, P).unwrap();
        prop_assert!(r >= i.max_degree());
        if let (Some(d), false) = (i.equigenerated_degree(), i.is_principal()) {
            prop_assert_eq!(has_linear_resolution(&i, P).unwrap(), r == d);
        }
    }

    #[test]
    fn koszul_matches_taylor(i in ideal().prop_filter("taylor cap", |i| i.len() <= 8)) {
        for p in [P, 2] {
            let b = betti(&i, p).unwrap();
            prop_assert_eq!(&b, &taylor_betti(&i, p).unwrap());
            prop_assert_eq!(b.total(0), i.len() as u64);
        }
    }

    #[test]
    fn betti_follows_variable_permutations(i in ideal(), seed in any::<u64>()) {
        let n = i.nvars();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            perm.swap(k, (s % (k as u64 + 1)) as usize);
            s /= k as u64 + 1;
        }
        let moved = MonomialIdeal::new(n, i.gens().iter().map(|g| {
            let mut e = vec![0; n];
            for (old, &new) in perm.iter().enumerate() {
                e[new] = g.exponent(old);
            }
            Monomial::new(e)
        }).collect()).unwrap();
        let b = betti(&i, P).unwrap();
        prop_assert_eq!(betti(&moved, P).unwrap(), b.permuted(&perm));
        prop_assert_eq!(regularity(&moved, P).unwrap(), b.regularity().unwrap());
    }

    #[test]
    fn veronese_round_trip(n in 1usize..=4, d in 1u32..=4, bounds in prop::collection::vec(0u32..=5, 4)) {
        let a = ExponentBounds(bounds[..n].to_vec());
        prop_assume!(a.total() >= u64::from(d));
        let v = veronese_type(n, d, &a).unwrap();
        prop_assert!(is_polymatroidal(&v).unwrap().polymatroidal);
        let (d2, a2) = is_veronese_type(&v).unwrap().unwrap();
        prop_assert_eq!(d2, d);
        prop_assert_eq!(veronese_type(n, d, &a2).unwrap(), v.clone());
        // recovered bounds are attained and clipped at d
        for (k, (&orig, &got)) in a.0.iter().zip(&a2.0).enumerate() {
            prop_assert!(got <= orig.min(d));
            prop_assert!(got == 0 || v.gens().iter().any(|g| g.exponent(k) == got));
        }
    }

    #[test]
    fn polymatroidal_products(bits in prop::collection::vec(1u64..16, 1..=3), more in prop::collection::vec(1u64..16, 1..=2)) {
        let prime = |b: &u64| MonomialPrime::new(4, VarSet::from_bits(*b)).unwrap();
        let t = transversal(&bits.iter().map(prime).collect::<Vec<_>>()).unwrap();
        let u = transversal(&more.iter().map(prime).collect::<Vec<_>>()).unwrap();
        prop_assert!(is_polymatroidal(&t).unwrap().polymatroidal);
        prop_assert!(is_polymatroidal(&t.product(&u).unwrap()).unwrap().polymatroidal);
        prop_assert!(has_linear_resolution(&t, P).unwrap());
    }
}
