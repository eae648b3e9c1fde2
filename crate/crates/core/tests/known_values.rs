use monideal_core::resolution::{regularity, DEFAULT_CHAR};
use monideal_core::MonomialIdeal;

fn letters(nvars: usize, words: &[&str]) -> MonomialIdeal {
    let gens = words.iter().map(|w| {
        let mut e = vec![0u32; nvars];
        for c in w.chars() {
            e[(c as u8 - b'a') as usize] += 1;
        }
        e
    });
    MonomialIdeal::from_exponents(nvars, gens).unwrap()
}

fn cubic_seven() -> MonomialIdeal {
    letters(7, &["ace", "acf", "acg", "ade", "bcd", "bfg", "cde", "cdf", "cdg", "cef", "ceg", "cfg", "def", "deg", "dfg", "efg"])
}

fn six_var_cubic() -> MonomialIdeal {
    letters(6, &["def", "cef", "cdf", "cde", "bef", "bcd", "acf", "ade"])
}

#[test]
fn cubic_in_seven_vars_regularities() {
    let i = cubic_seven();
    assert_eq!(i.len(), 16);
    for p in [DEFAULT_CHAR, 2] {
        let regs: Vec<u32> = (1..=3).map(|k| regularity(&i.power(k).unwrap(), p).unwrap()).collect();
        assert_eq!(regs, [3, 6, 10]);
    }
}

#[test]
fn linear_cubic_with_nonlinear_square() {
    let i = six_var_cubic();
    assert_eq!(regularity(&i, DEFAULT_CHAR).unwrap(), 3);
    let r2 = regularity(&i.power(2).unwrap(), DEFAULT_CHAR).unwrap();
    assert_eq!(r2, 7);
}
