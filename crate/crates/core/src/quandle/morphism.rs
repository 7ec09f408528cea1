use serde::Serialize;

use super::{FiniteQuandle, QuandleError};

pub const DEFAULT_HOM_BUDGET: u128 = 10_000_000;

/// A map between finite quandles, as an image array over source indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuandleMap {
    pub source_order: usize,
    pub target_order: usize,
    pub images: Vec<usize>,
}

impl QuandleMap {
    pub fn is_homomorphism(&self, source: &FiniteQuandle, target: &FiniteQuandle) -> bool {
        let n = source.order();
        if self.images.len() != n || self.images.iter().any(|&i| i >= target.order()) {
            return false;
        }
        (0..n).all(|x| {
            (0..n).all(|y| {
                self.images[source.mul(x, y)] == target.mul(self.images[x], self.images[y])
            })
        })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        self.images.len() == self.target_order
            && self
                .images
                .iter()
                .all(|&i| !std::mem::replace(&mut seen[i], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        for &i in &self.images {
            seen[i] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Preimage sizes, one per target element.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target_order];
        for &i in &self.images {
            sizes[i] += 1;
        }
        sizes
    }
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A smallest generating set, lexicographically first among those of its size.
///
/// Every generating set meets every orbit, so the search starts at the orbit count.
pub fn generating_set(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.order();
    for k in q.orbits().len()..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if q.generates(&combo) {
                return combo;
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full element set generates")
}

/// How each element is reached from the generators: `x = parent *^sign gens[gen]`.
struct SpanningTree {
    gens: Vec<usize>,
    /// BFS order; generators first.
    order: Vec<usize>,
    step: Vec<Option<(usize, usize, bool)>>,
}

impl SpanningTree {
    fn new(q: &FiniteQuandle, gens: Vec<usize>) -> Self {
        let n = q.order();
        let mut step = vec![None; n];
        let mut reached = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &g in &gens {
            if !reached[g] {
                reached[g] = true;
                order.push(g);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (gi, &g) in gens.iter().enumerate() {
                for (z, positive) in [(q.mul(x, g), true), (q.mul_inv(x, g), false)] {
                    if !reached[z] {
                        reached[z] = true;
                        step[z] = Some((x, gi, positive));
                        order.push(z);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), n, "generating set must generate");
        SpanningTree { gens, order, step }
    }

    /// Extends generator images to a map, then checks it respects `* g` for
    /// every generator `g` (which implies it is a homomorphism).
    fn extend(&self, q: &FiniteQuandle, k: &FiniteQuandle, images: &[usize]) -> Option<Vec<usize>> {
        let mut f = vec![usize::MAX; q.order()];
        for (&g, &img) in self.gens.iter().zip(images) {
            if f[g] != usize::MAX && f[g] != img {
                return None;
            }
            f[g] = img;
        }
        for &x in &self.order {
            if let Some((p, gi, positive)) = self.step[x] {
                let (fp, fg) = (f[p], images[gi]);
                f[x] = if positive {
                    k.mul(fp, fg)
                } else {
                    k.mul_inv(fp, fg)
                };
            }
        }
        for x in 0..q.order() {
            for (&g, &img) in self.gens.iter().zip(images) {
                if f[q.mul(x, g)] != k.mul(f[x], img) {
                    return None;
                }
            }
        }
        Some(f)
    }
}

/// Odometer over `|K|^len` image tuples in lexicographic order.
fn next_tuple(tuple: &mut [usize], base: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// First isomorphism `q -> k` in lexicographic order of generator images, if any.
pub fn find_isomorphism(q: &FiniteQuandle, k: &FiniteQuandle) -> Option<QuandleMap> {
    if q.order() != k.order() {
        return None;
    }
    let tree = SpanningTree::new(q, generating_set(q));
    let mut images = vec![0; tree.gens.len()];
    loop {
        let distinct = {
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        if distinct {
            if let Some(f) = tree.extend(q, k, &images) {
                let map = QuandleMap {
                    source_order: q.order(),
                    target_order: k.order(),
                    images: f,
                };
                if map.is_bijective() && map.is_homomorphism(q, k) {
                    return Some(map);
                }
            }
        }
        if !next_tuple(&mut images, k.order()) {
            return None;
        }
    }
}

pub fn all_homomorphisms(
    q: &FiniteQuandle,
    k: &FiniteQuandle,
) -> Result<Vec<QuandleMap>, QuandleError> {
    all_homomorphisms_with_budget(q, k, DEFAULT_HOM_BUDGET)
}

/// Every homomorphism `q -> k`, ordered lexicographically by generator images.
///
/// `budget` bounds the number of candidate generator assignments tried.
pub fn all_homomorphisms_with_budget(
    q: &FiniteQuandle,
    k: &FiniteQuandle,
    budget: u128,
) -> Result<Vec<QuandleMap>, QuandleError> {
    let tree = SpanningTree::new(q, generating_set(q));
    let needed = (k.order() as u128).saturating_pow(tree.gens.len() as u32);
    if needed > budget {
        return Err(QuandleError::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    let mut images = vec![0; tree.gens.len()];
    loop {
        if let Some(f) = tree.extend(q, k, &images) {
            let map = QuandleMap {
                source_order: q.order(),
                target_order: k.order(),
                images: f,
            };
            debug_assert!(map.is_homomorphism(q, k));
            out.push(map);
        }
        if !next_tuple(&mut images, k.order()) {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_hom_count(q: &FiniteQuandle, k: &FiniteQuandle) -> usize {
        let mut f = vec![0; q.order()];
        let mut count = 0;
        loop {
            let map = QuandleMap {
                source_order: q.order(),
                target_order: k.order(),
                images: f.clone(),
            };
            if map.is_homomorphism(q, k) {
                count += 1;
            }
            if !next_tuple(&mut f, k.order()) {
                return count;
            }
        }
    }

    #[test]
    fn hom_counts_match_brute_force() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let t2 = FiniteQuandle::trivial(2).unwrap();
        let t1 = FiniteQuandle::trivial(1).unwrap();
        let r5 = FiniteQuandle::dihedral(5).unwrap();
        assert_eq!(all_homomorphisms(&r3, &t2).unwrap().len(), 2);
        assert_eq!(all_homomorphisms(&r3, &r3).unwrap().len(), 9);
        assert_eq!(all_homomorphisms(&t1, &r5).unwrap().len(), 5);
        for (q, k) in [(&r3, &r5), (&r5, &r3), (&t2, &r3), (&r3, &t2)] {
            assert_eq!(
                all_homomorphisms(q, k).unwrap().len(),
                brute_hom_count(q, k)
            );
        }
        let r4 = FiniteQuandle::dihedral(4).unwrap();
        assert_eq!(
            all_homomorphisms(&r4, &r3).unwrap().len(),
            brute_hom_count(&r4, &r3)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let t3 = FiniteQuandle::trivial(3).unwrap();
        let r5 = FiniteQuandle::dihedral(5).unwrap();
        let err = all_homomorphisms_with_budget(&t3, &r5, 100).unwrap_err();
        assert_eq!(
            err,
            QuandleError::BudgetExceeded {
                needed: 125,
                budget: 100
            }
        );
    }

    #[test]
    fn isomorphism_examples() {
        let r3 = FiniteQuandle::dihedral(3).unwrap();
        let t3 = FiniteQuandle::trivial(3).unwrap();
        assert!(find_isomorphism(&t3, &r3).is_none());
        assert!(find_isomorphism(&r3, &t3).is_none());
        let t2 = FiniteQuandle::trivial(2).unwrap();
        let r2 = FiniteQuandle::dihedral(2).unwrap();
        assert!(find_isomorphism(&t2, &r2).is_some());
        let id = find_isomorphism(&r3, &r3).unwrap();
        assert_eq!(id.images, vec![0, 1, 2]);
        assert!(find_isomorphism(&r3, &FiniteQuandle::dihedral(5).unwrap()).is_none());
    }

    #[test]
    fn relabelled_quandle_is_isomorphic() {
        let r5 = FiniteQuandle::dihedral(5).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let mut inv = [0; 5];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = (0..5)
            .map(|x| (0..5).map(|y| perm[r5.mul(inv[x], inv[y])]).collect())
            .collect();
        let k = FiniteQuandle::from_table(table).unwrap();
        let f = find_isomorphism(&r5, &k).unwrap();
        assert!(f.is_homomorphism(&r5, &k) && f.is_bijective());
        assert!(find_isomorphism(&k, &r5).is_some());
    }

    #[test]
    fn generating_sets() {
        assert_eq!(
            generating_set(&FiniteQuandle::dihedral(3).unwrap()),
            vec![0, 1]
        );
        assert_eq!(
            generating_set(&FiniteQuandle::trivial(4).unwrap()),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            generating_set(&FiniteQuandle::dihedral(6).unwrap()),
            vec![0, 1]
        );
        assert_eq!(
            generating_set(&FiniteQuandle::dihedral(4).unwrap()),
            vec![0, 1]
        );
    }
}
