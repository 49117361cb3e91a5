use std::sync::Arc;

use itertools::Itertools;

use crate::error::{factorial, search_space, Budget, Error, Result};
use crate::morphisms::{complete_unchecked, is_bijection, Homomorphism, Homotopy};
use crate::qcore::{Magma, Quasigroup};

/// All homomorphisms `dom → cod` as raw maps, in lexicographic order.
///
/// Backtracks over the images of `0, 1, …` and rejects a prefix as soon as a
/// product whose factors and value all lie in the prefix is violated. `budget`
/// bounds the number of search nodes visited.
pub fn homomorphisms_between<D, C>(dom: &D, cod: &C, budget: Budget) -> Result<Vec<Vec<usize>>>
where
    D: Magma + ?Sized,
    C: Magma + ?Sized,
{
    struct Search<'a, D: ?Sized, C: ?Sized> {
        dom: &'a D,
        cod: &'a C,
        map: Vec<usize>,
        found: Vec<Vec<usize>>,
        visits: u64,
        budget: Budget,
    }

    impl<D: Magma + ?Sized, C: Magma + ?Sized> Search<'_, D, C> {
        fn consistent(&self, k: usize) -> bool {
            let map = &self.map;
            for a in 0..=k {
                for b in 0..=k {
                    let p = self.dom.mul(a, b);
                    if p > k || (a != k && b != k && p != k) {
                        continue;
                    }
                    if self.cod.mul(map[a], map[b]) != map[p] {
                        return false;
                    }
                }
            }
            true
        }

        fn run(&mut self, k: usize) -> Result<()> {
            if k == self.dom.order() {
                self.found.push(self.map.clone());
                return Ok(());
            }
            for v in 0..self.cod.order() {
                self.visits += 1;
                self.budget.ensure(u128::from(self.visits))?;
                self.map[k] = v;
                if self.consistent(k) {
                    self.run(k + 1)?;
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        dom,
        cod,
        map: vec![0; dom.order()],
        found: Vec::new(),
        visits: 0,
        budget,
    };
    search.run(0)?;
    Ok(search.found)
}

/// Every homomorphism `q → r`, lexicographic in the map vector.
///
/// Refuses to run when `|r|^|q|` exceeds `budget`.
pub fn enumerate_homomorphisms(
    q: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    budget: Budget,
) -> Result<Vec<Homomorphism>> {
    budget.ensure(search_space(r.order(), q.order()))?;
    let maps = homomorphisms_between(q.as_ref(), r.as_ref(), Budget(u64::MAX))?;
    Ok(maps
        .into_iter()
        .map(|m| Homomorphism::new_unchecked(q.clone(), r.clone(), m))
        .collect())
}

/// All maps `{0..len} → {0..base}` in lexicographic order.
pub(crate) fn all_maps(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < base {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Every homotopy `q → r`, lexicographic in `(f1, f2)`.
///
/// Only `(f1, f2)` pairs are iterated; the third component comes from
/// [`complete_homotopy`](crate::morphisms::complete_homotopy). Refuses to run
/// when `|r|^(2|q|)` exceeds `budget`.
pub fn enumerate_homotopies(
    q: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    budget: Budget,
) -> Result<Vec<Homotopy>> {
    budget.ensure(search_space(r.order(), 2 * q.order()))?;
    let n = q.order();
    let m = r.order();
    let firsts = all_maps(n, m);
    let mut out = Vec::new();
    for f1 in &firsts {
        for f2 in &firsts {
            if let Some(maps) = complete_unchecked(q, r, f1, f2) {
                out.push(Homotopy::new_unchecked(q.clone(), r.clone(), maps));
            }
        }
    }
    Ok(out)
}

/// Per-element isomorphism invariants used to restrict candidate images.
fn element_signature<M: Magma + ?Sized>(m: &M, x: usize) -> (bool, usize, usize, usize) {
    let n = m.order();
    let idempotent = m.mul(x, x) == x;
    let commuting = (0..n).filter(|&y| m.mul(x, y) == m.mul(y, x)).count();
    let fixes_left = (0..n).filter(|&y| m.mul(x, y) == y).count();
    let fixes_right = (0..n).filter(|&y| m.mul(y, x) == y).count();
    (idempotent, commuting, fixes_left, fixes_right)
}

/// The lexicographically least isomorphism `q → r`, if any.
///
/// Depth-first search over the smallest unassigned element, trying images in
/// ascending order. Every assignment is closed under the multiplication
/// (`f(a·b) := f(a)·f(b)` for all assigned `a, b`), failing on any clash or
/// loss of injectivity; candidates must also agree on cheap element invariants.
pub fn find_isomorphism<D, C>(q: &D, r: &C) -> Option<Vec<usize>>
where
    D: Magma + ?Sized,
    C: Magma + ?Sized,
{
    let n = q.order();
    if n != r.order() {
        return None;
    }
    let sig_q: Vec<_> = (0..n).map(|x| element_signature(q, x)).collect();
    let sig_r: Vec<_> = (0..n).map(|x| element_signature(r, x)).collect();
    if sig_q.iter().sorted().ne(sig_r.iter().sorted()) {
        return None;
    }

    const UNSET: usize = usize::MAX;

    struct State<'a, D: ?Sized, C: ?Sized> {
        q: &'a D,
        r: &'a C,
        map: Vec<usize>,
        inv: Vec<usize>,
        trail: Vec<usize>,
    }

    impl<D: Magma + ?Sized, C: Magma + ?Sized> State<'_, D, C> {
        fn set(&mut self, x: usize, v: usize) -> bool {
            if self.inv[v] != UNSET {
                return false;
            }
            self.map[x] = v;
            self.inv[v] = x;
            self.trail.push(x);
            true
        }

        fn assign(&mut self, x: usize, v: usize) -> bool {
            if !self.set(x, v) {
                return false;
            }
            let mut next = self.trail.len() - 1;
            while next < self.trail.len() {
                let a = self.trail[next];
                next += 1;
                let mut i = 0;
                while i < self.trail.len() {
                    let b = self.trail[i];
                    i += 1;
                    for (u, w) in [(a, b), (b, a)] {
                        let p = self.q.mul(u, w);
                        let img = self.r.mul(self.map[u], self.map[w]);
                        if self.map[p] == UNSET {
                            if !self.set(p, img) {
                                return false;
                            }
                        } else if self.map[p] != img {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn undo(&mut self, len: usize) {
            for x in self.trail.drain(len..) {
                self.inv[self.map[x]] = UNSET;
                self.map[x] = UNSET;
            }
        }
    }

    fn dfs<D: Magma + ?Sized, C: Magma + ?Sized>(
        st: &mut State<'_, D, C>,
        sig_q: &[(bool, usize, usize, usize)],
        sig_r: &[(bool, usize, usize, usize)],
    ) -> bool {
        let Some(x) = st.map.iter().position(|&v| v == UNSET) else {
            return true;
        };
        for v in 0..st.map.len() {
            if st.inv[v] != UNSET || sig_q[x] != sig_r[v] {
                continue;
            }
            let mark = st.trail.len();
            if st.assign(x, v) && dfs(st, sig_q, sig_r) {
                return true;
            }
            st.undo(mark);
        }
        false
    }

    let mut st = State {
        q,
        r,
        map: vec![UNSET; n],
        inv: vec![UNSET; n],
        trail: Vec::with_capacity(n),
    };
    dfs(&mut st, &sig_q, &sig_r).then_some(st.map)
}

/// The first isotopy `q → r` with bijective `f1, f2` in lexicographic order.
///
/// `f3` is derived from `f3(x·y) := f1(x)·f2(y)` and accepted only if that is
/// well defined and bijective. Refuses to run when `(n!)²` exceeds `budget`.
pub fn find_isotopy(
    q: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    budget: Budget,
) -> Result<Option<Homotopy>> {
    let n = q.order();
    if n != r.order() {
        return Ok(None);
    }
    let perms = factorial(n);
    budget.ensure(perms.saturating_mul(perms))?;
    let all: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    for f1 in &all {
        'f2: for f2 in &all {
            let mut f3 = vec![usize::MAX; n];
            for x in 0..n {
                for y in 0..n {
                    let img = r.mul(f1[x], f2[y]);
                    let slot = &mut f3[q.mul(x, y)];
                    if *slot == usize::MAX {
                        *slot = img;
                    } else if *slot != img {
                        continue 'f2;
                    }
                }
            }
            if is_bijection(&f3, n) {
                let h = Homotopy::new(q.clone(), r.clone(), [f1.clone(), f2.clone(), f3])
                    .map_err(|_| Error::NotHomotopy)?;
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}
