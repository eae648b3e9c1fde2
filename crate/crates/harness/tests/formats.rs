use monideal::doc::{load_ideal, prime_from_indices, prime_indices, BettiDoc, IdealDoc};
use monideal::parse::{parse_ideal, parse_monomial, parse_prime};
use monideal_core::resolution::betti;
use monideal_core::{Monomial, MonomialIdeal, MonomialPrime, VarSet};
use proptest::prelude::*;

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0u32..=4, n), 1..=5)))
        .prop_map(|(n, gens)| MonomialIdeal::from_exponents(n, gens).unwrap())
}

proptest! {
    #[test]
    fn display_parses_back(i in ideal()) {
        prop_assert_eq!(parse_ideal(&i.to_string(), Some(i.nvars())).unwrap(), i.clone());
        for g in i.gens() {
            prop_assert_eq!(&parse_monomial(&g.to_string(), Some(i.nvars())).unwrap(), g);
        }
    }

    #[test]
    fn json_round_trip(i in ideal()) {
        let text = serde_json::to_string(&IdealDoc::from(&i)).unwrap();
        let doc: IdealDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MonomialIdeal::try_from(doc).unwrap(), i.clone());
        prop_assert_eq!(load_ideal(&text, None).unwrap(), i);
    }

    #[test]
    fn prime_round_trip(n in 1usize..=8, bits in 1u64..256) {
        let vars = VarSet::from_bits(bits & VarSet::full(n).bits());
        prop_assume!(!vars.is_empty());
        let p = MonomialPrime::new(n, vars).unwrap();
        let ix = prime_indices(&p);
        prop_assert_eq!(prime_from_indices(n, &ix).unwrap(), p);
        let listed: Vec<String> = ix.iter().map(|k| format!("x{k}")).collect();
        prop_assert_eq!(parse_prime(&listed.join(","), n).unwrap(), p);
    }
}

#[test]
fn betti_doc_lookup() {
    let i = parse_ideal("x1*x2, x2*x3", None).unwrap();
    let doc = BettiDoc::from(&betti(&i, 2).unwrap());
    assert_eq!(doc.get(0, &Monomial::new(vec![1, 1, 0])), 1);
    assert_eq!(doc.get(1, &Monomial::new(vec![1, 1, 1])), 1);
    assert_eq!(doc.get(1, &Monomial::new(vec![1, 2, 1])), 0);
    let back: BettiDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back, doc);
}

#[test]
fn json_disagreeing_nvars_is_rejected() {
    assert!(load_ideal(r#"{"nvars": 2, "gens": [[1, 0]]}"#, Some(3)).is_err());
    assert!(load_ideal(r#"{"nvars": 2, "gens": [[1, 0, 0]]}"#, None).is_err());
}
