use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::quandle::{FiniteQuandle, QuandleOps};

use super::free::{fq_pow, FreeQuandleElement};
use super::FpqError;

/// Term over generator symbols with binary nodes `*^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuandleExpression {
    Generator(String),
    Op {
        left: Box<QuandleExpression>,
        right: Box<QuandleExpression>,
        exponent: i64,
    },
}

impl QuandleExpression {
    pub fn generator(symbol: &str) -> Self {
        QuandleExpression::Generator(symbol.to_string())
    }

    /// `left *^exponent right`. An exponent of 0 evaluates to `left`; the text
    /// format does not accept it.
    pub fn op(left: QuandleExpression, right: QuandleExpression, exponent: i64) -> Self {
        QuandleExpression::Op {
            left: Box::new(left),
            right: Box::new(right),
            exponent,
        }
    }

    pub fn star(self, right: QuandleExpression) -> Self {
        QuandleExpression::op(self, right, 1)
    }

    pub fn symbols(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            QuandleExpression::Generator(s) => {
                out.insert(s);
            }
            QuandleExpression::Op { left, right, .. } => {
                left.collect_symbols(out);
                right.collect_symbols(out);
            }
        }
    }

    pub fn mentions(&self, symbol: &str) -> bool {
        match self {
            QuandleExpression::Generator(s) => s == symbol,
            QuandleExpression::Op { left, right, .. } => {
                left.mentions(symbol) || right.mentions(symbol)
            }
        }
    }

    pub fn substitute(&self, symbol: &str, replacement: &QuandleExpression) -> Self {
        match self {
            QuandleExpression::Generator(s) if s == symbol => replacement.clone(),
            QuandleExpression::Generator(_) => self.clone(),
            QuandleExpression::Op {
                left,
                right,
                exponent,
            } => QuandleExpression::op(
                left.substitute(symbol, replacement),
                right.substitute(symbol, replacement),
                *exponent,
            ),
        }
    }

    pub fn to_fq(&self) -> FreeQuandleElement {
        match self {
            QuandleExpression::Generator(s) => FreeQuandleElement::generator(s),
            QuandleExpression::Op {
                left,
                right,
                exponent,
            } => fq_pow(&left.to_fq(), &right.to_fq(), *exponent),
        }
    }

    /// Left-normed form of `a^g`: `((a *^k1 s1) *^k2 s2) ...` over the syllables of `g`.
    pub fn from_fq(x: &FreeQuandleElement) -> Self {
        x.conjugator()
            .syllables()
            .into_iter()
            .fold(QuandleExpression::generator(x.base()), |acc, (s, k)| {
                QuandleExpression::op(acc, QuandleExpression::generator(&s), k)
            })
    }

    /// Evaluates in `q`, looking up generators with `assign`.
    pub fn evaluate<Q: QuandleOps>(
        &self,
        q: &Q,
        assign: &impl Fn(&str) -> Option<Q::Element>,
    ) -> Result<Q::Element, FpqError> {
        match self {
            QuandleExpression::Generator(s) => {
                assign(s).ok_or_else(|| FpqError::UndeclaredSymbol(s.clone()))
            }
            QuandleExpression::Op {
                left,
                right,
                exponent,
            } => {
                let x = left.evaluate(q, assign)?;
                let y = right.evaluate(q, assign)?;
                Ok(q.op_pow(&x, &y, *exponent))
            }
        }
    }
}

impl fmt::Display for QuandleExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleExpression::Generator(s) => write!(f, "{s}"),
            QuandleExpression::Op {
                left,
                right,
                exponent,
            } => {
                let wrap = |e: &QuandleExpression| match e {
                    QuandleExpression::Generator(s) => s.clone(),
                    op => format!("({op})"),
                };
                if *exponent == 1 {
                    write!(f, "{} * {}", wrap(left), wrap(right))
                } else {
                    write!(f, "{} *^{} {}", wrap(left), exponent, wrap(right))
                }
            }
        }
    }
}

impl Serialize for QuandleExpression {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Relation {
    pub lhs: QuandleExpression,
    pub rhs: QuandleExpression,
}

impl Relation {
    pub fn new(lhs: QuandleExpression, rhs: QuandleExpression) -> Self {
        Relation { lhs, rhs }
    }

    pub fn mentions(&self, symbol: &str) -> bool {
        self.lhs.mentions(symbol) || self.rhs.mentions(symbol)
    }

    pub fn substitute(&self, symbol: &str, replacement: &QuandleExpression) -> Self {
        Relation::new(
            self.lhs.substitute(symbol, replacement),
            self.rhs.substitute(symbol, replacement),
        )
    }

    /// Both sides in left-normed form, with common trailing operators cancelled
    /// (`x *^k s = y *^k s` iff `x = y`, and `s = s *^k s`).
    pub fn normalized(&self) -> Self {
        let (mut x, mut y) = (self.lhs.to_fq(), self.rhs.to_fq());
        loop {
            let gx = x.conjugator().letters();
            let gy = y.conjugator().letters();
            let tail = match (gx.last(), gy.last()) {
                (Some(l1), Some(l2)) if l1 == l2 => Some(l1.clone()),
                (Some(l1), None) if l1.symbol == y.base() => Some(l1.clone()),
                (None, Some(l2)) if l2.symbol == x.base() => Some(l2.clone()),
                _ => None,
            };
            let Some(tail) = tail else { break };
            let strip = |e: &FreeQuandleElement| {
                let ls = e.conjugator().letters();
                if ls.last() == Some(&tail) {
                    let w = super::GroupWord::from_letters(ls[..ls.len() - 1].iter().cloned());
                    FreeQuandleElement::new(e.base(), w)
                } else {
                    e.clone()
                }
            };
            x = strip(&x);
            y = strip(&y);
        }
        Relation::new(
            QuandleExpression::from_fq(&x),
            QuandleExpression::from_fq(&y),
        )
    }

    /// Same element of the free quandle on both sides.
    pub fn is_trivial(&self) -> bool {
        self.lhs.to_fq() == self.rhs.to_fq()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// `<S | R>` with declared generators and ground relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<Relation>) -> Result<Self, FpqError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(FpqError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relations {
            for s in r.lhs.symbols().into_iter().chain(r.rhs.symbols()) {
                if !seen.contains(s) {
                    return Err(FpqError::UndeclaredSymbol(s.to_string()));
                }
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == symbol)
    }

    /// Indices of relations that fail in `q` when generator `i` maps to `images[i]`.
    pub fn failing_relations<Q: QuandleOps>(
        &self,
        q: &Q,
        images: &[Q::Element],
    ) -> Result<Vec<usize>, FpqError> {
        if images.len() != self.generators.len() {
            return Err(FpqError::AssignmentLength {
                expected: self.generators.len(),
                found: images.len(),
            });
        }
        let assign = |s: &str| self.generator_index(s).map(|i| images[i].clone());
        let mut failing = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if r.lhs.evaluate(q, &assign)? != r.rhs.evaluate(q, &assign)? {
                failing.push(i);
            }
        }
        Ok(failing)
    }

    /// Tietze elimination of `generator` using relation `relation` of shape
    /// `generator = e` or `e = generator`. Other relations that mention the
    /// generator are rewritten with `e` substituted and then normalized.
    pub fn eliminate_generator(
        &self,
        generator: &str,
        relation: usize,
    ) -> Result<Presentation, FpqError> {
        let r = self
            .relations
            .get(relation)
            .ok_or(FpqError::NoSuchRelation(relation))?;
        let g_leaf = QuandleExpression::generator(generator);
        let definition = if r.lhs == g_leaf {
            &r.rhs
        } else if r.rhs == g_leaf {
            &r.lhs
        } else {
            return Err(FpqError::NotDefining {
                generator: generator.to_string(),
                relation,
            });
        };
        if definition.mentions(generator) {
            return Err(FpqError::SelfReferential(generator.to_string()));
        }
        if self.generator_index(generator).is_none() {
            return Err(FpqError::UndeclaredSymbol(generator.to_string()));
        }
        let generators = self
            .generators
            .iter()
            .filter(|g| *g != generator)
            .cloned()
            .collect();
        let relations = self
            .relations
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != relation)
            .map(|(_, r)| {
                if r.mentions(generator) {
                    r.substitute(generator, definition).normalized()
                } else {
                    r.clone()
                }
            })
            .collect();
        Presentation::new(generators, relations)
    }

    /// Copy with relation `index` removed.
    pub fn without_relation(&self, index: usize) -> Presentation {
        let relations = self
            .relations
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, r)| r.clone())
            .collect();
        Presentation {
            generators: self.generators.clone(),
            relations,
        }
    }

    /// Inverse T1 moves: drops each relation, first to last, that is trivial in
    /// the free quandle or that a partial enumeration of the remaining ones
    /// (at most `cap` live elements) proves to be a consequence.
    pub fn drop_consequences(&self, cap: usize) -> Presentation {
        let mut p = self.clone();
        let mut i = 0;
        while i < p.relations.len() {
            let rest = p.without_relation(i);
            if p.relations[i].is_trivial() || super::enumerate::proves(&rest, &p.relations[i], cap)
            {
                p = rest;
            } else {
                i += 1;
            }
        }
        p
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_presentation(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignmentCheck {
    pub failing_relations: Vec<usize>,
    pub surjective: bool,
}

impl AssignmentCheck {
    pub fn relations_hold(&self) -> bool {
        self.failing_relations.is_empty()
    }

    /// Relations hold and the images generate, so the assignment induces an epimorphism.
    pub fn is_epimorphism(&self) -> bool {
        self.relations_hold() && self.surjective
    }
}

/// Whether generator `i` to `images[i]` satisfies every relation, and whether
/// the images generate `q`.
pub fn check_assignment(
    p: &Presentation,
    q: &FiniteQuandle,
    images: &[usize],
) -> Result<AssignmentCheck, FpqError> {
    if let Some(&bad) = images.iter().find(|&&x| x >= q.order()) {
        return Err(FpqError::ImageOutOfRange(bad));
    }
    let failing_relations = p.failing_relations(q, images)?;
    let surjective = q.generates(images);
    Ok(AssignmentCheck {
        failing_relations,
        surjective,
    })
}
