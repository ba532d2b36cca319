use proptest::prelude::*;
use sepdeform_core::group::{parse_word, Perm};
use sepdeform_core::hecke::Hecke;

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(&images).unwrap())
}

fn word(n: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..n, 0..len)
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in perm(7)) {
        prop_assert_eq!(Perm::parse(&p.to_string(), 7).unwrap(), p);
    }

    #[test]
    fn reduced_words_are_reduced(w in word(6, 20)) {
        let p = Perm::from_word(6, &w).unwrap();
        let r = p.reduced_word();
        prop_assert_eq!(r.len(), p.coxeter_length());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(Perm::from_word(6, &r).unwrap(), p);
    }

    #[test]
    fn written_words_parse_back(w in word(9, 12)) {
        let text: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
        prop_assert_eq!(parse_word(&text.join(" "), 9).unwrap(), w.clone());
        prop_assert_eq!(parse_word(&text.concat(), 9).unwrap(), w);
    }

    #[test]
    fn word_parser_never_panics(text in "[sT_0-9 *,x()]{0,40}") {
        let _ = parse_word(&text, 5);
        let _ = Perm::parse(&text, 5);
    }

    #[test]
    fn hecke_products_are_associative(a in word(4, 5), b in word(4, 5), c in word(4, 5)) {
        let h = Hecke::generic(4).unwrap();
        let (x, y, z) = (h.word(&a).unwrap(), h.word(&b).unwrap(), h.word(&c).unwrap());
        let left = h.multiply(&h.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = h.multiply(&x, &h.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn concatenated_words_multiply(a in word(4, 6), b in word(4, 6)) {
        let h = Hecke::generic(4).unwrap();
        let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
        let prod = h.multiply(&h.word(&a).unwrap(), &h.word(&b).unwrap()).unwrap();
        prop_assert_eq!(h.word(&ab).unwrap(), prod);
    }
}
