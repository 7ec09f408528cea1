use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{QuandleError, QuandleOps};

/// A quandle on `0..n` given by its operation table, `table[x][y] = x * y`.
///
/// Construction checks the table shape and that every column is a
/// permutation (so the inverse table exists). Q1 and Q3 are checked by
/// [`FiniteQuandle::validate_axioms`], not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    table: Vec<Vec<usize>>,
    inverse: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Axiom violations found in an operation table. Empty iff the table is a quandle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Elements `x` with `x * x != x`.
    pub idempotence: Vec<usize>,
    /// Columns `y` whose map `x -> x * y` is not a bijection.
    pub bijectivity: Vec<usize>,
    /// Triples `(x, y, z)` with `(x*y)*z != (x*z)*(y*z)`.
    pub distributivity: Vec<(usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.idempotence.is_empty() && self.bijectivity.is_empty() && self.distributivity.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.idempotence.len() + self.bijectivity.len() + self.distributivity.len()
    }
}

fn check_shape(table: &[Vec<usize>]) -> Result<usize, QuandleError> {
    let n = table.len();
    if n == 0 {
        return Err(QuandleError::EmptyQuandle);
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(QuandleError::Malformed(format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(y) = row.iter().position(|&z| z >= n) {
            return Err(QuandleError::Malformed(format!(
                "entry ({x}, {y}) = {} is out of range 0..{n}",
                row[y]
            )));
        }
    }
    Ok(n)
}

/// Checks Q1-Q3 exhaustively on a raw table.
///
/// A malformed table (ragged or out-of-range) is an `Err`; axiom failures
/// are listed in the `Ok` report.
pub fn validate_table(table: &[Vec<usize>]) -> Result<ValidationReport, QuandleError> {
    let n = check_shape(table)?;
    let mut report = ValidationReport::default();
    for x in 0..n {
        if table[x][x] != x {
            report.idempotence.push(x);
        }
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            seen[row[y]] = true;
        }
        if seen.iter().any(|s| !s) {
            report.bijectivity.push(y);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = table[x][y];
            for z in 0..n {
                if table[xy][z] != table[table[x][z]][table[y][z]] {
                    report.distributivity.push((x, y, z));
                }
            }
        }
    }
    Ok(report)
}

impl FiniteQuandle {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let n = check_shape(&table)?;
        let mut inverse = vec![vec![usize::MAX; n]; n];
        for (x, row) in table.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                if inverse[z][y] != usize::MAX {
                    return Err(QuandleError::NotBijective { column: y });
                }
                inverse[z][y] = x;
            }
        }
        Ok(FiniteQuandle {
            table,
            inverse,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, QuandleError> {
        if labels.len() != self.order() {
            return Err(QuandleError::Malformed(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Trivial quandle `x * y = x` on `n` elements.
    pub fn trivial(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::EmptyQuandle);
        }
        Self::from_table((0..n).map(|x| vec![x; n]).collect())
    }

    /// Dihedral quandle `i * j = 2j - i mod n`.
    pub fn dihedral(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::EmptyQuandle);
        }
        Self::from_table(
            (0..n)
                .map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse_table(&self) -> &[Vec<usize>] {
        &self.inverse
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    #[inline]
    pub fn mul_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x][y]
    }

    pub fn pow(&self, x: usize, y: usize, k: i64) -> usize {
        self.op_pow(&x, &y, k)
    }

    pub fn validate_axioms(&self) -> ValidationReport {
        validate_table(&self.table).expect("shape checked at construction")
    }

    pub fn is_quandle(&self) -> bool {
        self.validate_axioms().is_empty()
    }

    fn check_range(&self, xs: &[usize]) -> Result<(), QuandleError> {
        match xs.iter().find(|&&x| x >= self.order()) {
            Some(&x) => Err(QuandleError::OutOfRange(x)),
            None => Ok(()),
        }
    }

    /// Least subset containing `seeds` closed under `*` and `*^-1`, sorted.
    ///
    /// Right operands reduce to seeds, since `x * (s * t) = ((x *^-1 t) * s) * t`,
    /// so the closure is the orbit of the seeds under the operators `*s`, `*^-1 s`.
    pub fn subquandle_generated(&self, seeds: &[usize]) -> Result<Vec<usize>, QuandleError> {
        if seeds.is_empty() {
            return Err(QuandleError::EmptySeeds);
        }
        self.check_range(seeds)?;
        let ops: BTreeSet<usize> = seeds.iter().copied().collect();
        let mut member = vec![false; self.order()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in &ops {
            member[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &s in &ops {
                for z in [self.table[x][s], self.inverse[x][s]] {
                    if !member[z] {
                        member[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        Ok((0..self.order()).filter(|&x| member[x]).collect())
    }

    pub fn generates(&self, seeds: &[usize]) -> bool {
        self.subquandle_generated(seeds)
            .map(|s| s.len() == self.order())
            .unwrap_or(false)
    }

    /// The table restricted to `subset` (which must be closed), renumbered in
    /// the order given.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteQuandle, QuandleError> {
        self.check_range(subset)?;
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let mut table = Vec::with_capacity(subset.len());
        for &x in subset {
            let mut row = Vec::with_capacity(subset.len());
            for &y in subset {
                let z = index[self.table[x][y]];
                if z == usize::MAX {
                    return Err(QuandleError::Malformed(format!(
                        "subset not closed: {x} * {y} = {}",
                        self.table[x][y]
                    )));
                }
                row.push(z);
            }
            table.push(row);
        }
        let q = FiniteQuandle::from_table(table)?;
        match &self.labels {
            Some(l) => q.with_labels(subset.iter().map(|&x| l[x].clone()).collect()),
            None => Ok(q),
        }
    }

    /// Orbits under the inner operators `x -> x * y`, as sorted element lists.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, self.table[x][y]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(x);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }
}

impl QuandleOps for FiniteQuandle {
    type Element = usize;

    fn op(&self, x: &usize, y: &usize) -> usize {
        self.table[*x][*y]
    }

    fn op_inv(&self, x: &usize, y: &usize) -> usize {
        self.inverse[*x][*y]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trivial_and_dihedral_are_quandles() {
        assert!(FiniteQuandle::trivial(5)
            .unwrap()
            .validate_axioms()
            .is_empty());
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert!(r3.validate_axioms().is_empty());
        assert_eq!(r3.table(), &[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert_eq!(FiniteQuandle::trivial(1).unwrap().table(), &[vec![0]]);
        assert_eq!(
            FiniteQuandle::dihedral(1).unwrap(),
            FiniteQuandle::trivial(1).unwrap()
        );
        assert_eq!(FiniteQuandle::trivial(0), Err(QuandleError::EmptyQuandle));
        assert_eq!(FiniteQuandle::dihedral(0), Err(QuandleError::EmptyQuandle));
    }

    #[test]
    fn even_dihedral_fails_nothing_but_is_disconnected() {
        let r4 = FiniteQuandle::dihedral(4).unwrap();
        assert!(r4.is_quandle());
        assert!(!r4.is_connected());
    }

    #[test]
    fn non_bijective_column_reported() {
        let table = vec![vec![0, 0], vec![1, 0]];
        let report = validate_table(&table).unwrap();
        assert_eq!(report.bijectivity, vec![1]);
        assert_eq!(
            FiniteQuandle::from_table(table),
            Err(QuandleError::NotBijective { column: 1 })
        );
    }

    #[test]
    fn malformed_tables_rejected() {
        assert!(matches!(
            validate_table(&[vec![0, 1], vec![1]]),
            Err(QuandleError::Malformed(_))
        ));
        assert!(matches!(
            validate_table(&[vec![0, 2], vec![1, 1]]),
            Err(QuandleError::Malformed(_))
        ));
        assert_eq!(validate_table(&[]), Err(QuandleError::EmptyQuandle));
    }

    #[test]
    fn q1_and_q3_failures_reported() {
        // a cyclic shift that ignores y: Q1 fails, Q3 holds
        let shift = vec![vec![1, 1, 1], vec![2, 2, 2], vec![0, 0, 0]];
        let r = validate_table(&shift).unwrap();
        assert_eq!(r.idempotence, vec![0, 1, 2]);
        assert!(r.bijectivity.is_empty());
        // Q1 and Q2 hold, Q3 fails: (0*1)*0 = 1 but (0*0)*(1*0) = 0
        let r = validate_table(&[vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]]).unwrap();
        assert!(r.idempotence.is_empty() && r.bijectivity.is_empty());
        assert!(r.distributivity.contains(&(0, 1, 0)));
    }

    #[test]
    fn op_pow_examples() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.pow(2, 1, 0), 2);
        assert_eq!(r3.pow(0, 1, 2), 0);
        assert_eq!(r3.pow(0, 1, -1), r3.mul_inv(0, 1));
    }

    #[test]
    fn generated_subquandles() {
        let t3 = FiniteQuandle::trivial(3).unwrap();
        assert_eq!(t3.subquandle_generated(&[0]).unwrap(), vec![0]);
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        assert_eq!(r3.subquandle_generated(&[0, 1, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(r3.subquandle_generated(&[0, 1]).unwrap(), vec![0, 1, 2]);
        assert_eq!(r3.subquandle_generated(&[]), Err(QuandleError::EmptySeeds));
        assert_eq!(
            r3.subquandle_generated(&[7]),
            Err(QuandleError::OutOfRange(7))
        );
        let r4 = FiniteQuandle::dihedral(4).unwrap();
        assert_eq!(r4.subquandle_generated(&[0, 2]).unwrap(), vec![0, 2]);
        let sub = r4.restrict(&[0, 2]).unwrap();
        assert!(sub.is_quandle());
    }

    #[test]
    fn connectivity() {
        assert!(FiniteQuandle::dihedral(3).unwrap().is_connected());
        assert!(!FiniteQuandle::trivial(2).unwrap().is_connected());
        assert_eq!(
            FiniteQuandle::dihedral(6).unwrap().orbits(),
            vec![vec![0, 2, 4], vec![1, 3, 5]]
        );
    }

    /// Closure computed the slow way: all products and inverse products.
    fn brute_closure(q: &FiniteQuandle, seeds: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = seeds.iter().copied().collect();
        loop {
            let mut next = set.clone();
            for &x in &set {
                for &y in &set {
                    next.insert(q.mul(x, y));
                    next.insert(q.mul_inv(x, y));
                }
            }
            if next == set {
                return set.into_iter().collect();
            }
            set = next;
        }
    }

    proptest! {
        #[test]
        fn op_pow_is_additive(n in 1usize..12, x in 0usize..12, y in 0usize..12,
                              a in -6i64..=6, b in -6i64..=6) {
            let q = FiniteQuandle::dihedral(n).unwrap();
            let (x, y) = (x % n, y % n);
            prop_assert_eq!(q.pow(x, y, a + b), q.pow(q.pow(x, y, a), y, b));
        }

        #[test]
        fn closure_matches_brute_force(n in 1usize..15, seeds in proptest::collection::vec(0usize..15, 1..4)) {
            let q = FiniteQuandle::dihedral(n).unwrap();
            let seeds: Vec<usize> = seeds.into_iter().map(|s| s % n).collect();
            let fast = q.subquandle_generated(&seeds).unwrap();
            prop_assert_eq!(&fast, &brute_closure(&q, &seeds));
            // idempotent and axioms hold on the restriction
            prop_assert_eq!(&q.subquandle_generated(&fast).unwrap(), &fast);
            prop_assert!(q.restrict(&fast).unwrap().is_quandle());
        }

        #[test]
        fn closure_is_monotone(n in 2usize..15, s in 0usize..15, t in 0usize..15) {
            let q = FiniteQuandle::dihedral(n).unwrap();
            let small = q.subquandle_generated(&[s % n]).unwrap();
            let big = q.subquandle_generated(&[s % n, t % n]).unwrap();
            prop_assert!(small.iter().all(|x| big.contains(x)));
        }
    }
}
