//! Enumeration of finitely presented quandles.
//!
//! Every element of `<S | R>` has the form `a^g`, so the quandle is the set of
//! points reachable from one base point per generator under the right action
//! of words in `S`. The enumerator builds that action table by relator-tracing
//! coset enumeration (HLT style, with coincidence processing):
//!
//! * each relation `a^g = b^h` says that the points `base_a . g` and
//!   `base_b . h` coincide, and that the words `g^-1 a g` and `h^-1 b h` act
//!   identically, so `g^-1 a g h^-1 b^-1 h` is traced as a relator at every point;
//! * each base point is fixed by its own generator (`a * a = a`).
//!
//! The closed table is then read as a quandle, `x * y = x . (w^-1 a w)` where
//! `y = base_a . w`, and checked exhaustively against the axioms and relations
//! before it is returned.

use std::collections::VecDeque;

use serde::Serialize;
use serde_json::json;

use crate::quandle::FiniteQuandle;

use super::free::GroupWord;
use super::presentation::{Presentation, QuandleExpression, Relation};
use super::FpqError;

pub const ENUMERATION_SCHEMA: &str = "quandlekit/enumeration/v1";

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub passes: usize,
    pub definitions: usize,
    pub coincidences: usize,
    pub max_live: usize,
    /// Live elements at the end of each pass; on cap exhaustion the last entry
    /// is the count at which the run stopped.
    pub pass_live_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationOutcome {
    Closed {
        quandle: FiniteQuandle,
        generator_images: Vec<usize>,
    },
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub outcome: EnumerationOutcome,
    pub cap: usize,
    pub stats: EnumerationStats,
}

impl EnumerationResult {
    pub fn is_closed(&self) -> bool {
        matches!(self.outcome, EnumerationOutcome::Closed { .. })
    }

    pub fn quandle(&self) -> Option<&FiniteQuandle> {
        match &self.outcome {
            EnumerationOutcome::Closed { quandle, .. } => Some(quandle),
            EnumerationOutcome::CapExceeded => None,
        }
    }

    pub fn generator_images(&self) -> Option<&[usize]> {
        match &self.outcome {
            EnumerationOutcome::Closed {
                generator_images, ..
            } => Some(generator_images),
            EnumerationOutcome::CapExceeded => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        self.quandle().map(FiniteQuandle::order)
    }

    pub fn to_json(&self, p: &Presentation) -> serde_json::Value {
        let mut v = json!({
            "schema": ENUMERATION_SCHEMA,
            "generators": p.generators(),
            "relations": p.relations().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "cap": self.cap,
            "statistics": self.stats,
        });
        match &self.outcome {
            EnumerationOutcome::Closed {
                quandle,
                generator_images,
            } => {
                v["outcome"] = json!("closed");
                v["order"] = json!(quandle.order());
                v["generator_images"] = json!(generator_images);
            }
            EnumerationOutcome::CapExceeded => {
                v["outcome"] = json!("cap-exceeded");
                v["note"] = json!("the cap was reached; this is evidence of growth, not a proof that the quandle is infinite");
            }
        }
        v
    }
}

struct CapHit;

struct Enumerator {
    cols: usize,
    /// `table[p * cols + c]`; column `2i` is generator `i`, `2i + 1` its inverse.
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    relators: Vec<Vec<usize>>,
    /// `(start generator, word, end generator)`: `base_start . word = base_end`.
    constraints: Vec<(usize, Vec<usize>, usize)>,
    bases: Vec<usize>,
    stats: EnumerationStats,
}

fn columns(p: &Presentation, w: &GroupWord) -> Vec<usize> {
    w.letters()
        .iter()
        .map(|l| {
            2 * p.generator_index(&l.symbol).expect("declared generator") + usize::from(l.inverse)
        })
        .collect()
}

fn inv(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn new(p: &Presentation, cap: usize) -> Self {
        let n = p.generators().len();
        let mut relators = Vec::new();
        let mut constraints = Vec::new();
        for (i, g) in p.generators().iter().enumerate() {
            constraints.push((i, columns(p, &GroupWord::power(g, 1)), i));
        }
        for r in p.relations() {
            let (x, y) = (r.lhs.to_fq(), r.rhs.to_fq());
            let gx = p.generator_index(x.base()).expect("declared generator");
            let gy = p.generator_index(y.base()).expect("declared generator");
            let path = x.conjugator().concat(&y.conjugator().inverse());
            constraints.push((gx, columns(p, &path), gy));
            let rel = x.as_group_word().concat(&y.as_group_word().inverse());
            if !rel.is_empty() {
                relators.push(columns(p, &rel));
            }
        }
        let mut e = Enumerator {
            cols: 2 * n,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            cap,
            relators,
            constraints,
            bases: Vec::new(),
            stats: EnumerationStats::default(),
        };
        for _ in 0..n {
            let b = e.new_point();
            e.bases.push(b);
        }
        e
    }

    fn new_point(&mut self) -> usize {
        let p = self.parent.len();
        self.parent.push(p);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        p
    }

    fn get(&self, p: usize, c: usize) -> usize {
        self.table[p * self.cols + c]
    }

    fn set(&mut self, p: usize, c: usize, q: usize) {
        self.table[p * self.cols + c] = q;
    }

    fn alive(&self, p: usize) -> bool {
        self.parent[p] == p
    }

    fn rep(&mut self, p: usize) -> usize {
        let mut r = p;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut q = p;
        while self.parent[q] != r {
            let next = self.parent[q];
            self.parent[q] = r;
            q = next;
        }
        r
    }

    fn define(&mut self, p: usize, c: usize) -> Result<usize, CapHit> {
        if self.live >= self.cap {
            return Err(CapHit);
        }
        let q = self.new_point();
        self.set(p, c, q);
        self.set(q, inv(c), p);
        self.stats.definitions += 1;
        Ok(q)
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill] = keep;
        self.live -= 1;
        self.stats.coincidences += 1;
        queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for c in 0..self.cols {
                let d = self.get(dead, c);
                if d == NONE {
                    continue;
                }
                if self.get(d, inv(c)) == dead {
                    self.set(d, inv(c), NONE);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_c = self.get(mu, c);
                let nu_inv = self.get(nu, inv(c));
                if mu_c != NONE {
                    self.merge(nu, mu_c, &mut queue);
                } else if nu_inv != NONE {
                    self.merge(mu, nu_inv, &mut queue);
                } else {
                    self.set(mu, c, nu);
                    self.set(nu, inv(c), mu);
                }
            }
        }
    }

    /// Makes `start . word = end` hold, defining points where needed.
    fn scan_and_fill(&mut self, start: usize, word: &[usize], end: usize) -> Result<(), CapHit> {
        let n = word.len();
        loop {
            let (start, end) = (self.rep(start), self.rep(end));
            let mut f = start;
            let mut i = 0;
            while i < n && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == n {
                if f != end {
                    self.coincidence(f, end);
                }
                return Ok(());
            }
            let mut b = end;
            let mut j = n;
            while j > i && self.get(b, inv(word[j - 1])) != NONE {
                b = self.get(b, inv(word[j - 1]));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, inv(word[i]), f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    fn apply_constraints(&mut self) -> Result<(), CapHit> {
        for k in 0..self.constraints.len() {
            let (s, ref w, e) = self.constraints[k];
            let w = w.clone();
            let (start, end) = (self.bases[s], self.bases[e]);
            self.scan_and_fill(start, &w, end)?;
        }
        Ok(())
    }

    fn process(&mut self, p: usize) -> Result<(), CapHit> {
        for k in 0..self.relators.len() {
            if !self.alive(p) {
                return Ok(());
            }
            let r = self.relators[k].clone();
            self.scan_and_fill(p, &r, p)?;
        }
        for c in 0..self.cols {
            if !self.alive(p) {
                return Ok(());
            }
            if self.get(p, c) == NONE {
                self.define(p, c)?;
            }
        }
        Ok(())
    }

    /// Layered HLT passes until every point is processed, then re-verification
    /// sweeps until no coincidence is found.
    fn run(&mut self) -> Result<(), CapHit> {
        self.apply_constraints()?;
        let mut cursor = 0;
        while cursor < self.parent.len() {
            let end = self.parent.len();
            while cursor < end {
                if self.alive(cursor) {
                    self.process(cursor)?;
                }
                cursor += 1;
            }
            self.stats.passes += 1;
            self.stats.pass_live_counts.push(self.live);
        }
        loop {
            let before = self.stats.coincidences;
            self.apply_constraints()?;
            for p in 0..self.parent.len() {
                if self.alive(p) {
                    self.process(p)?;
                }
            }
            if self.stats.coincidences == before {
                return Ok(());
            }
        }
    }

    /// Runs passes until `a . wa = b . wb` is visible in the table, the table
    /// closes, or the cap is hit.
    fn proves(&mut self, a: usize, wa: &[usize], b: usize, wb: &[usize]) -> bool {
        let decided = |e: &mut Enumerator| -> Option<bool> {
            let x = e.trace(e.bases[a], wa)?;
            let y = e.trace(e.bases[b], wb)?;
            Some(e.rep(x) == e.rep(y))
        };
        if self.apply_constraints().is_err() {
            return decided(self) == Some(true);
        }
        let mut cursor = 0;
        while cursor < self.parent.len() {
            if decided(self) == Some(true) {
                return true;
            }
            let end = self.parent.len();
            while cursor < end {
                if self.alive(cursor) && self.process(cursor).is_err() {
                    return decided(self) == Some(true);
                }
                cursor += 1;
            }
        }
        decided(self) == Some(true)
    }

    fn trace(&mut self, start: usize, word: &[usize]) -> Option<usize> {
        let mut p = self.rep(start);
        for &c in word {
            p = self.get(p, c);
            if p == NONE {
                return None;
            }
            p = self.rep(p);
        }
        Some(p)
    }
}

/// Whether a partial enumeration of `p` with at most `cap` live elements
/// shows that `r` holds in `<S | R>`.
pub(crate) fn proves(p: &Presentation, r: &Relation, cap: usize) -> bool {
    let (x, y) = (r.lhs.to_fq(), r.rhs.to_fq());
    let mut e = Enumerator::new(p, cap.max(p.generators().len()));
    let a = p.generator_index(x.base()).expect("declared generator");
    let b = p.generator_index(y.base()).expect("declared generator");
    let wa = columns(p, x.conjugator());
    let wb = columns(p, y.conjugator());
    e.proves(a, &wa, b, &wb)
}

/// Enumerates `<S | R>` with at most `cap` live elements.
pub fn enumerate_presented(p: &Presentation, cap: usize) -> Result<EnumerationResult, FpqError> {
    let n = p.generators().len();
    if n == 0 || cap < n {
        return Err(FpqError::CapTooSmall { cap, generators: n });
    }
    let mut e = Enumerator::new(p, cap);
    if e.run().is_err() {
        let mut stats = e.stats;
        stats.pass_live_counts.push(e.live);
        return Ok(EnumerationResult {
            outcome: EnumerationOutcome::CapExceeded,
            cap,
            stats,
        });
    }

    // Renumber breadth-first from the base points, remembering a word for each point.
    let mut id = vec![NONE; e.parent.len()];
    let mut words: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let mut generator_images = Vec::with_capacity(n);
    for g in 0..n {
        let b = e.rep(e.bases[g]);
        if id[b] == NONE {
            id[b] = order.len();
            order.push(b);
            words.push((g, Vec::new()));
            queue.push_back(b);
        }
        generator_images.push(id[b]);
    }
    while let Some(p) = queue.pop_front() {
        for c in 0..e.cols {
            let q = e.get(p, c);
            if id[q] == NONE {
                id[q] = order.len();
                order.push(q);
                let (g, mut w) = words[id[p]].clone();
                w.push(c);
                words.push((g, w));
                queue.push_back(q);
            }
        }
    }
    let size = order.len();
    let action: Vec<Vec<usize>> = (0..e.cols)
        .map(|c| order.iter().map(|&p| id[e.get(p, c)]).collect())
        .collect();
    let act = |x: usize, w: &mut dyn Iterator<Item = usize>| w.fold(x, |x, c| action[c][x]);

    let mut table = vec![vec![0; size]; size];
    for (y, (g, w)) in words.iter().enumerate() {
        for (x, row) in table.iter_mut().enumerate() {
            let back = act(x, &mut w.iter().rev().map(|&c| inv(c)));
            let turned = action[2 * g][back];
            row[y] = act(turned, &mut w.iter().copied());
        }
    }
    let labels = words
        .iter()
        .map(|(g, w)| {
            let word = GroupWord::from_letters(
                w.iter()
                    .map(|&c| super::Letter::new(&p.generators()[c / 2], c % 2 == 1)),
            );
            QuandleExpression::from_fq(&super::FreeQuandleElement::new(&p.generators()[*g], word))
                .to_string()
        })
        .collect();
    let quandle = FiniteQuandle::from_table(table)
        .and_then(|q| q.with_labels(labels))
        .map_err(|err| FpqError::Unsound(err.to_string()))?;
    let report = quandle.validate_axioms();
    if !report.is_empty() {
        return Err(FpqError::Unsound(format!(
            "{} axiom violations",
            report.violation_count()
        )));
    }
    let failing = p.failing_relations(&quandle, &generator_images)?;
    if !failing.is_empty() {
        return Err(FpqError::Unsound(format!(
            "relations {failing:?} fail in the closed table"
        )));
    }
    Ok(EnumerationResult {
        outcome: EnumerationOutcome::Closed {
            quandle,
            generator_images,
        },
        cap,
        stats: e.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpq::parse_presentation;

    fn twist(m: i64) -> Presentation {
        parse_presentation(&format!(
            "gens: a c\nrel: (a * c) * a = c\nrel: c *^{m} a = c\n"
        ))
        .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            enumerate_presented(&twist(1), 100).unwrap().order(),
            Some(1)
        );
        assert_eq!(
            enumerate_presented(&twist(2), 100).unwrap().order(),
            Some(3)
        );
        assert_eq!(
            enumerate_presented(&twist(3), 100).unwrap().order(),
            Some(8)
        );
    }

    #[test]
    fn free_and_trivial_presentations() {
        let one = parse_presentation("gens: a\n").unwrap();
        assert_eq!(enumerate_presented(&one, 10).unwrap().order(), Some(1));
        let free2 = parse_presentation("gens: a b\n").unwrap();
        let r = enumerate_presented(&free2, 50).unwrap();
        assert!(!r.is_closed());
        let t2 = parse_presentation("gens: a b\nrel: a * b = a\nrel: b * a = b\n").unwrap();
        let q = enumerate_presented(&t2, 50).unwrap();
        assert_eq!(q.order(), Some(2));
        assert_eq!(
            q.quandle().unwrap(),
            &FiniteQuandle::trivial(2)
                .unwrap()
                .with_labels(vec!["a".into(), "b".into()])
                .unwrap()
        );
    }

    #[test]
    fn cap_validation() {
        assert!(matches!(
            enumerate_presented(&twist(2), 1),
            Err(FpqError::CapTooSmall { .. })
        ));
    }

    #[test]
    fn cap_exceeded_report() {
        let r = enumerate_presented(&twist(6), 300).unwrap();
        assert!(!r.is_closed());
        let v = r.to_json(&twist(6));
        assert_eq!(v["outcome"], "cap-exceeded");
        assert!(v["note"].as_str().unwrap().contains("not a proof"));
    }

    #[test]
    fn deterministic() {
        let a = enumerate_presented(&twist(4), 500).unwrap();
        let b = enumerate_presented(&twist(4), 500).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn consequence_proofs() {
        let p = twist(4);
        let g = QuandleExpression::generator;
        let derived = Relation::new(
            QuandleExpression::op(g("a").star(g("c")), g("a"), 4),
            g("a").star(g("c")),
        );
        assert!(proves(&p, &derived, 200));
        assert!(!proves(&p, &Relation::new(g("a"), g("c")), 200));
    }
}
