//! Homomorphisms and homotopies between finite quasigroups.
//!
//! Maps are plain vectors holding the images of `0, …, n-1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qcore::{Magma, Quasigroup};

mod search;

pub use search::{
    enumerate_homomorphisms, enumerate_homotopies, find_isomorphism, find_isotopy,
    homomorphisms_between,
};

/// Fails unless `map` is total from `{0..dom}` into `{0..cod}`.
pub fn check_map(map: &[usize], dom: usize, cod: usize) -> Result<()> {
    if map.len() != dom {
        return Err(Error::MapLength {
            len: map.len(),
            expected: dom,
        });
    }
    match map.iter().find(|&&v| v >= cod) {
        Some(&v) => Err(Error::ElementOutOfRange {
            element: v,
            order: cod,
        }),
        None => Ok(()),
    }
}

pub fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `g ∘ f`.
pub fn compose_maps(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

pub fn is_bijection(map: &[usize], cod: usize) -> bool {
    if map.len() != cod {
        return false;
    }
    let mut seen = vec![false; cod];
    map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// `map(x) · map(y) = map(x · y)` for all `x, y`.
pub fn is_homomorphism_between<D, C>(dom: &D, cod: &C, map: &[usize]) -> Result<bool>
where
    D: Magma + ?Sized,
    C: Magma + ?Sized,
{
    check_map(map, dom.order(), cod.order())?;
    let n = dom.order();
    Ok((0..n).all(|x| (0..n).all(|y| cod.mul(map[x], map[y]) == map[dom.mul(x, y)])))
}

pub fn is_homomorphism(q: &Quasigroup, r: &Quasigroup, map: &[usize]) -> Result<bool> {
    is_homomorphism_between(q, r, map)
}

fn check_triple(q: &Quasigroup, r: &Quasigroup, maps: [&[usize]; 3]) -> Result<()> {
    maps.iter()
        .try_for_each(|m| check_map(m, q.order(), r.order()))
}

/// `f1(x) · f2(y) = f3(x · y)` for all `x, y`.
pub fn is_homotopy(q: &Quasigroup, r: &Quasigroup, maps: [&[usize]; 3]) -> Result<bool> {
    check_triple(q, r, maps)?;
    Ok(holds_mul_identity(q, r, maps))
}

fn holds_mul_identity(q: &Quasigroup, r: &Quasigroup, [f1, f2, f3]: [&[usize]; 3]) -> bool {
    let n = q.order();
    (0..n).all(|x| (0..n).all(|y| r.mul(f1[x], f2[y]) == f3[q.mul(x, y)]))
}

/// One flag per equivalent form of the homotopy condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomotopyIdentityReport {
    /// `f1(x) · f2(y) = f3(x · y)`
    pub mul: bool,
    /// `f3(x) / f2(y) = f1(x / y)`
    pub rdiv: bool,
    /// `f1(x) \ f3(y) = f2(x \ y)`
    pub ldiv: bool,
    /// `f2(x) ⫽ f3(y) = f1(x ⫽ y)`
    pub dual_rdiv: bool,
    /// `f3(x) ⑊ f1(y) = f2(x ⑊ y)`
    pub dual_ldiv: bool,
}

impl HomotopyIdentityReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.mul,
            self.rdiv,
            self.ldiv,
            self.dual_rdiv,
            self.dual_ldiv,
        ]
    }

    pub fn all(&self) -> bool {
        self.flags().iter().all(|&f| f)
    }

    pub fn all_equal(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&v| v == f[0])
    }
}

pub fn homotopy_identity_report(
    q: &Quasigroup,
    r: &Quasigroup,
    maps: [&[usize]; 3],
) -> Result<HomotopyIdentityReport> {
    check_triple(q, r, maps)?;
    let [f1, f2, f3] = maps;
    let n = q.order();
    let mut report = HomotopyIdentityReport {
        mul: true,
        rdiv: true,
        ldiv: true,
        dual_rdiv: true,
        dual_ldiv: true,
    };
    for x in 0..n {
        for y in 0..n {
            report.mul &= r.mul(f1[x], f2[y]) == f3[q.mul(x, y)];
            report.rdiv &= r.rdiv(f3[x], f2[y]) == f1[q.rdiv(x, y)];
            report.ldiv &= r.ldiv(f1[x], f3[y]) == f2[q.ldiv(x, y)];
            report.dual_rdiv &= r.dual_rdiv(f2[x], f3[y]) == f1[q.dual_rdiv(x, y)];
            report.dual_ldiv &= r.dual_ldiv(f3[x], f1[y]) == f2[q.dual_ldiv(x, y)];
        }
    }
    Ok(report)
}

/// Extends `(f1, f2)` to a homotopy if possible.
///
/// The candidate third component is `f3(x) = f1(0) · f2(0 \ x)`; it is returned
/// only after the whole triple passes [`is_homotopy`]. A homotopy's third
/// component is determined by the first two, so a returned `f3` is the only one.
pub fn complete_homotopy(
    q: &Quasigroup,
    r: &Quasigroup,
    f1: &[usize],
    f2: &[usize],
) -> Result<Option<[Vec<usize>; 3]>> {
    check_map(f1, q.order(), r.order())?;
    check_map(f2, q.order(), r.order())?;
    Ok(complete_unchecked(q, r, f1, f2))
}

pub(crate) fn complete_unchecked(
    q: &Quasigroup,
    r: &Quasigroup,
    f1: &[usize],
    f2: &[usize],
) -> Option<[Vec<usize>; 3]> {
    let base = 0;
    let f3: Vec<usize> = (0..q.order())
        .map(|x| r.mul(f1[base], f2[q.ldiv(base, x)]))
        .collect();
    holds_mul_identity(q, r, [f1, f2, &f3]).then(|| [f1.to_vec(), f2.to_vec(), f3])
}

/// A homomorphism between quasigroups. Construction checks the defining identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    dom: Arc<Quasigroup>,
    cod: Arc<Quasigroup>,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(dom: Arc<Quasigroup>, cod: Arc<Quasigroup>, map: Vec<usize>) -> Result<Self> {
        if !is_homomorphism(&dom, &cod, &map)? {
            return Err(Error::NotHomomorphism);
        }
        Ok(Homomorphism { dom, cod, map })
    }

    pub(crate) fn new_unchecked(
        dom: Arc<Quasigroup>,
        cod: Arc<Quasigroup>,
        map: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(is_homomorphism(&dom, &cod, &map), Ok(true));
        Homomorphism { dom, cod, map }
    }

    pub fn identity(q: Arc<Quasigroup>) -> Self {
        let map = identity_map(q.order());
        Homomorphism {
            cod: q.clone(),
            dom: q,
            map,
        }
    }

    pub fn dom(&self) -> &Arc<Quasigroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Quasigroup> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_isomorphism(&self) -> bool {
        is_bijection(&self.map, self.cod.order())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Homomorphism) -> Result<Homomorphism> {
        if f.cod != self.dom {
            return Err(Error::NotComposable);
        }
        Ok(Homomorphism {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            map: compose_maps(&self.map, &f.map),
        })
    }
}

/// A homotopy `(f1, f2, f3)`. Construction checks the defining identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homotopy {
    dom: Arc<Quasigroup>,
    cod: Arc<Quasigroup>,
    maps: [Vec<usize>; 3],
}

impl Homotopy {
    pub fn new(dom: Arc<Quasigroup>, cod: Arc<Quasigroup>, maps: [Vec<usize>; 3]) -> Result<Self> {
        let [f1, f2, f3] = &maps;
        if !is_homotopy(&dom, &cod, [f1, f2, f3])? {
            return Err(Error::NotHomotopy);
        }
        Ok(Homotopy { dom, cod, maps })
    }

    pub(crate) fn new_unchecked(
        dom: Arc<Quasigroup>,
        cod: Arc<Quasigroup>,
        maps: [Vec<usize>; 3],
    ) -> Self {
        Homotopy { dom, cod, maps }
    }

    /// `(1, 1, 1)`.
    pub fn identity(q: Arc<Quasigroup>) -> Self {
        let id = identity_map(q.order());
        Homotopy {
            cod: q.clone(),
            dom: q,
            maps: [id.clone(), id.clone(), id],
        }
    }

    /// `(f, f, f)` for a homomorphism `f`.
    pub fn from_homomorphism(f: &Homomorphism) -> Self {
        let m = f.map().to_vec();
        Homotopy {
            dom: f.dom.clone(),
            cod: f.cod.clone(),
            maps: [m.clone(), m.clone(), m],
        }
    }

    pub fn dom(&self) -> &Arc<Quasigroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Quasigroup> {
        &self.cod
    }

    pub fn maps(&self) -> [&[usize]; 3] {
        [&self.maps[0], &self.maps[1], &self.maps[2]]
    }

    pub fn f1(&self) -> &[usize] {
        &self.maps[0]
    }

    pub fn f2(&self) -> &[usize] {
        &self.maps[1]
    }

    pub fn f3(&self) -> &[usize] {
        &self.maps[2]
    }

    pub fn is_isotopy(&self) -> bool {
        self.maps.iter().all(|m| is_bijection(m, self.cod.order()))
    }

    /// `(g1 ∘ f1, g2 ∘ f2, g3 ∘ f3)` where `self` is `g`.
    pub fn compose(&self, f: &Homotopy) -> Result<Homotopy> {
        if f.cod != self.dom {
            return Err(Error::NotComposable);
        }
        let maps = [0, 1, 2].map(|i| compose_maps(&self.maps[i], &f.maps[i]));
        Ok(Homotopy {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            maps,
        })
    }
}

pub fn identity_homotopy(q: Arc<Quasigroup>) -> Homotopy {
    Homotopy::identity(q)
}

/// `g ∘ f`.
pub fn compose_homotopies(g: &Homotopy, f: &Homotopy) -> Result<Homotopy> {
    g.compose(f)
}
