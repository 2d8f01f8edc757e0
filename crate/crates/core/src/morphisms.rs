//! Homomorphisms, isomorphism testing and canonical forms.

use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{MagmaError, Result};
use crate::magma::Magma;

/// Largest order for homomorphism enumeration.
pub const HOM_MAX_ORDER: usize = 6;
/// Largest order for canonical forms (`n!` relabelings).
pub const CANON_MAX_ORDER: usize = 6;

/// A structure-preserving map `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom<'a> {
    pub source: &'a Magma,
    pub target: &'a Magma,
    pub map: Vec<usize>,
}

impl Hom<'_> {
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.map.iter().for_each(|&v| hit[v] = true);
        hit.into_iter().all(|h| h)
    }

    pub fn preserves_operation(&self) -> bool {
        let (a, b, f) = (self.source, self.target, &self.map);
        a.elements().all(|x| a.elements().all(|y| f[a.op(x, y)] == b.op(f[x], f[y])))
    }
}

/// Lexicographically least flattened table over all relabelings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub order: usize,
    pub table: Vec<u8>,
}

impl CanonicalForm {
    pub fn to_magma(&self) -> Magma {
        Magma::from_flat_unchecked(self.order, self.table.clone())
    }
}

/// Every homomorphism `a -> b` in lexicographic order of the map, optionally
/// only the surjective ones.
pub fn homomorphisms<'a>(a: &'a Magma, b: &'a Magma, surjective_only: bool) -> Result<Vec<Hom<'a>>> {
    for order in [a.order(), b.order()] {
        if order > HOM_MAX_ORDER {
            return Err(MagmaError::UnsupportedOrder { operation: "homomorphism search", order, max: HOM_MAX_ORDER });
        }
    }
    let mut out = Vec::new();
    let mut search = HomSearch::new(a, b, false);
    search.run(&mut |map| {
        let hom = Hom { source: a, target: b, map: map.to_vec() };
        if !surjective_only || hom.is_surjective() {
            out.push(hom);
        }
        true
    });
    Ok(out)
}

/// A bijection `sigma` with `sigma(x * y) = sigma(x) . sigma(y)`, if any.
pub fn is_isomorphic(a: &Magma, b: &Magma) -> Option<Vec<usize>> {
    if a.order() != b.order() || invariant_profile(a) != invariant_profile(b) {
        return None;
    }
    let mut found = None;
    HomSearch::new(a, b, true).run(&mut |map| {
        found = Some(map.to_vec());
        false
    });
    found
}

/// Cheap relabeling invariants: sorted counts of idempotents and of row and
/// column image sizes.
fn invariant_profile(m: &Magma) -> (usize, Vec<usize>, Vec<usize>) {
    let idempotents = m.elements().filter(|&x| m.op(x, x) == x).count();
    let rows = m.elements().map(|l| m.row_image(l).len()).sorted().collect();
    let cols = m.elements().map(|r| m.column_image(r).len()).sorted().collect();
    (idempotents, rows, cols)
}

/// Depth-first assignment of `map[0], map[1], ...` that prunes as soon as
/// a fully assigned pair `(x, y, x * y)` breaks the law.
struct HomSearch<'a> {
    a: &'a Magma,
    b: &'a Magma,
    injective: bool,
    map: Vec<usize>,
    used: u64,
}

impl<'a> HomSearch<'a> {
    fn new(a: &'a Magma, b: &'a Magma, injective: bool) -> Self {
        HomSearch { a, b, injective, map: Vec::with_capacity(a.order()), used: 0 }
    }

    /// Calls `visit` on each complete map until it returns `false`.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let k = self.map.len();
        if k == self.a.order() {
            return visit(&self.map);
        }
        for v in 0..self.b.order() {
            if self.injective && self.used >> v & 1 == 1 {
                continue;
            }
            self.map.push(v);
            if self.consistent_at(k) {
                self.used |= 1 << v;
                let go_on = self.run(visit);
                self.used &= !(1 << v);
                if !go_on {
                    self.map.pop();
                    return false;
                }
            }
            self.map.pop();
        }
        true
    }

    /// Checks every pair whose operands and product are all assigned and
    /// that involves the newest element `k`.
    fn consistent_at(&self, k: usize) -> bool {
        let (a, b, f) = (self.a, self.b, &self.map);
        (0..=k).all(|x| {
            [(x, k), (k, x)].into_iter().all(|(l, r)| {
                let p = a.op(l, r);
                p > k || f[p] == b.op(f[l], f[r])
            })
        }) && (0..k).all(|x| {
            // pairs not involving k whose product is k
            (0..k).all(|y| a.op(x, y) != k || f[k] == b.op(f[x], f[y]))
        })
    }
}

/// All permutations of `0..n` in lexicographic order with their inverses,
/// cached for `n <= CANON_MAX_ORDER`.
fn permutations_with_inverse(n: usize) -> &'static [(Vec<u8>, Vec<u8>)] {
    static CACHE: OnceLock<Vec<Vec<(Vec<u8>, Vec<u8>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=CANON_MAX_ORDER)
            .map(|k| {
                (0..k as u8)
                    .permutations(k)
                    .map(|p| {
                        let mut inv = vec![0u8; k];
                        for (i, &v) in p.iter().enumerate() {
                            inv[v as usize] = i as u8;
                        }
                        (p, inv)
                    })
                    .collect()
            })
            .collect()
    });
    &cache[n]
}

pub fn canonical_form(m: &Magma) -> Result<CanonicalForm> {
    let n = m.order();
    if n > CANON_MAX_ORDER {
        return Err(MagmaError::UnsupportedOrder { operation: "canonical form", order: n, max: CANON_MAX_ORDER });
    }
    let table = m.flat();
    let mut best = vec![u8::MAX; n * n];
    for (perm, inv) in permutations_with_inverse(n) {
        // relabeled[i][j] = perm(m[inv(i)][inv(j)]), compared lazily
        let mut improving = false;
        let mut idx = 0;
        'cells: for i in 0..n {
            let row = inv[i] as usize * n;
            for j in 0..n {
                let v = perm[table[row + inv[j] as usize] as usize];
                if improving {
                    best[idx] = v;
                } else if v < best[idx] {
                    improving = true;
                    best[idx] = v;
                } else if v > best[idx] {
                    break 'cells;
                }
                idx += 1;
            }
        }
    }
    Ok(CanonicalForm { order: n, table: best })
}
