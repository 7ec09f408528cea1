use std::fmt;

use serde::Serialize;

/// One letter `s^e` of a free-group word, `e = +-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub symbol: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: &str, inverse: bool) -> Self {
        Letter {
            symbol: symbol.to_string(),
            inverse,
        }
    }

    pub fn inv(&self) -> Self {
        Letter {
            symbol: self.symbol.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in the free group on the generator symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    /// Reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out
                .last()
                .is_some_and(|last| last.symbol == l.symbol && last.inverse != l.inverse)
            {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord { letters: out }
    }

    /// `s^k` for any integer `k`.
    pub fn power(symbol: &str, k: i64) -> Self {
        let letter = Letter::new(symbol, k < 0);
        GroupWord {
            letters: vec![letter; k.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(Letter::inv).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        GroupWord::from_letters(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Maximal runs `(symbol, exponent)`, e.g. `c a a` gives `[(c, 1), (a, 2)]`.
    pub fn syllables(&self) -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((s, k)) if *s == l.symbol => *k += l.exponent(),
                _ => out.push((l.symbol.clone(), l.exponent())),
            }
        }
        out
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (s, k)) in self.syllables().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *k == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{k}")?;
            }
        }
        Ok(())
    }
}

/// `a^g = g^-1 a g` in the free quandle; the conjugator never starts with `a^+-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeQuandleElement {
    base: String,
    conjugator: GroupWord,
}

impl FreeQuandleElement {
    pub fn generator(symbol: &str) -> Self {
        FreeQuandleElement {
            base: symbol.to_string(),
            conjugator: GroupWord::empty(),
        }
    }

    /// Canonicalizes by stripping leading powers of the base.
    pub fn new(base: &str, conjugator: GroupWord) -> Self {
        let skip = conjugator
            .letters
            .iter()
            .take_while(|l| l.symbol == base)
            .count();
        let letters = conjugator.letters[skip..].to_vec();
        FreeQuandleElement {
            base: base.to_string(),
            conjugator: GroupWord { letters },
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn conjugator(&self) -> &GroupWord {
        &self.conjugator
    }

    /// The group element `g^-1 a g`.
    pub fn as_group_word(&self) -> GroupWord {
        self.conjugator
            .inverse()
            .concat(&GroupWord::power(&self.base, 1))
            .concat(&self.conjugator)
    }
}

impl fmt::Display for FreeQuandleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^({})", self.base, self.conjugator)
        }
    }
}

/// `a^g * b^h = a^{g h^-1 b h}`.
pub fn fq_multiply(x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
    fq_pow(x, y, 1)
}

/// `a^g *^-1 b^h = a^{g h^-1 b^-1 h}`.
pub fn fq_multiply_inv(x: &FreeQuandleElement, y: &FreeQuandleElement) -> FreeQuandleElement {
    fq_pow(x, y, -1)
}

/// `x *^k y = a^{g h^-1 b^k h}`.
pub fn fq_pow(x: &FreeQuandleElement, y: &FreeQuandleElement, k: i64) -> FreeQuandleElement {
    let h = &y.conjugator;
    let g = x
        .conjugator
        .concat(&h.inverse())
        .concat(&GroupWord::power(&y.base, k))
        .concat(h);
    FreeQuandleElement::new(&x.base, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(s: &str) -> GroupWord {
        GroupWord::from_letters(s.chars().map(|c| {
            if c.is_ascii_uppercase() {
                Letter::new(&c.to_ascii_lowercase().to_string(), true)
            } else {
                Letter::new(&c.to_string(), false)
            }
        }))
    }

    fn el(base: &str, conj: &str) -> FreeQuandleElement {
        FreeQuandleElement::new(base, word(conj))
    }

    #[test]
    fn multiplication_examples() {
        let a = FreeQuandleElement::generator("a");
        let c = FreeQuandleElement::generator("c");
        assert_eq!(fq_multiply(&a, &a), a);
        assert_eq!(fq_multiply(&a, &c), el("a", "c"));
        assert_eq!(fq_multiply(&el("a", "c"), &a), el("a", "ca"));
    }

    #[test]
    fn reduction_and_canonical_form() {
        assert_eq!(word("abBc"), word("ac"));
        assert_eq!(word("aA"), GroupWord::empty());
        assert_eq!(el("a", "aAbaB").conjugator(), &word("baB"));
        assert_eq!(el("a", "aaAc"), el("a", "c"));
        assert_eq!(
            word("caa").syllables(),
            vec![("c".to_string(), 1), ("a".to_string(), 2)]
        );
        assert_eq!(el("a", "caa").to_string(), "a^(c a^2)");
    }

    fn arb_element() -> impl Strategy<Value = FreeQuandleElement> {
        let sym = prop::sample::select(vec!["a", "b", "c"]);
        (
            sym.clone(),
            prop::collection::vec((sym, any::<bool>()), 0..=4),
        )
            .prop_map(|(b, ls)| {
                FreeQuandleElement::new(
                    b,
                    GroupWord::from_letters(ls.into_iter().map(|(s, i)| Letter::new(s, i))),
                )
            })
    }

    proptest! {
        #[test]
        fn idempotence(x in arb_element()) {
            prop_assert_eq!(fq_multiply(&x, &x), x);
        }

        #[test]
        fn right_division(x in arb_element(), y in arb_element()) {
            prop_assert_eq!(fq_multiply_inv(&fq_multiply(&x, &y), &y), x.clone());
            prop_assert_eq!(fq_multiply(&fq_multiply_inv(&x, &y), &y), x);
        }

        #[test]
        fn self_distributivity(x in arb_element(), y in arb_element(), z in arb_element()) {
            let lhs = fq_multiply(&fq_multiply(&x, &y), &z);
            let rhs = fq_multiply(&fq_multiply(&x, &z), &fq_multiply(&y, &z));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form_ignores_base_prefix(x in arb_element(), k in -3i64..=3) {
            let prefixed = GroupWord::power(x.base(), k).concat(x.conjugator());
            let again = FreeQuandleElement::new(x.base(), prefixed);
            prop_assert_eq!(&again, &x);
            prop_assert_eq!(FreeQuandleElement::new(x.base(), x.conjugator().clone()), x);
        }

        #[test]
        fn power_matches_iteration(x in arb_element(), y in arb_element(), k in -3i64..=3) {
            let mut it = x.clone();
            for _ in 0..k.unsigned_abs() {
                it = if k > 0 { fq_multiply(&it, &y) } else { fq_multiply_inv(&it, &y) };
            }
            prop_assert_eq!(fq_pow(&x, &y, k), it);
        }
    }
}
