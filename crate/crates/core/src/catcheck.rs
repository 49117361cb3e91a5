//! Elementwise verification of the adjunction between semisymmetric
//! quasigroups with homomorphisms and quasigroups with homotopies, of the
//! faithfulness and object-injectivity of `Δ` and `Γ`, and of the algebra
//! equations for the induced monad.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::error::{search_space, Budget, Error, Result};
use crate::morphisms::{
    self, compose_maps, enumerate_homotopies, find_isomorphism, find_isotopy,
    homomorphisms_between, identity_map, is_homomorphism_between, is_homotopy, Homomorphism,
    Homotopy,
};
use crate::qcore::{Magma, Quasigroup};
use crate::semisym::{
    delta_arrow_map, delta_object, gamma_arrow_map, gamma_table, gamma_tagged, product_map3,
    DeltaView, GammaVariant, TripleIndex,
};

/// `x ↦ (x, x, x)` on encoded triples.
pub fn diagonal_map(n: usize) -> Vec<usize> {
    let idx = TripleIndex::new(n);
    (0..n).map(|x| idx.encode([x, x, x])).collect()
}

/// The three projections `Q³ → Q` on encoded triples.
pub fn projection_maps(n: usize) -> [Vec<usize>; 3] {
    let idx = TripleIndex::new(n);
    [0, 1, 2].map(|i| (0..idx.size()).map(|t| idx.decode(t)[i]).collect())
}

/// Whether the diagonal is a homomorphism `P → ΔP`, for any quasigroup `P`.
pub fn diagonal_is_homomorphism(p: &Quasigroup) -> bool {
    is_homomorphism_between(p, &DeltaView::new(p), &diagonal_map(p.order()))
        .expect("diagonal map is total")
}

fn require_semisymmetric(p: &Quasigroup, what: &str) -> Result<()> {
    if p.is_semisymmetric() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not semisymmetric")))
    }
}

/// The unit component `η_P : P → ΔΣP`, `x ↦ (x, x, x)`.
///
/// `P` must be semisymmetric; otherwise the diagonal need not be a
/// homomorphism and a precondition error is returned.
pub fn unit_arrow(p: &Arc<Quasigroup>) -> Result<Homomorphism> {
    require_semisymmetric(p, "unit source")?;
    Homomorphism::new(
        p.clone(),
        Arc::new(delta_object(p)),
        diagonal_map(p.order()),
    )
}

/// The counit component `ε_Q = (π1, π2, π3) : ΣΔQ → Q`.
pub fn counit_arrow(q: &Arc<Quasigroup>) -> Homotopy {
    Homotopy::new(
        Arc::new(delta_object(q)),
        q.clone(),
        projection_maps(q.order()),
    )
    .expect("projections form a homotopy")
}

/// `(Δε_Q ∘ η_ΔQ = 1, π_i ∘ η_P = 1 for each i)`.
///
/// The first identity is evaluated on maps only: `ΔΔQ` has `n⁹` elements.
pub fn check_triangular(q: &Quasigroup, p: &Quasigroup) -> Result<(bool, bool)> {
    require_semisymmetric(p, "second argument")?;

    let n = q.order();
    let nn = n * n * n;
    let eta_dq = diagonal_map(nn);
    let [p1, p2, p3] = projection_maps(n);
    let delta_eps = product_map3(nn, n, [&p1, &p2, &p3]);
    let first = compose_maps(&delta_eps, &eta_dq) == identity_map(nn);

    let m = p.order();
    let eta_p = diagonal_map(m);
    let second = projection_maps(m)
        .iter()
        .all(|pi| compose_maps(pi, &eta_p) == identity_map(m));
    Ok((first, second))
}

/// An arrow whose naturality square is to be checked.
#[derive(Debug, Clone, Copy)]
pub enum NaturalityArrow<'a> {
    /// A homomorphism between semisymmetric quasigroups.
    Unit(&'a Homomorphism),
    /// Any homotopy.
    Counit(&'a Homotopy),
}

/// `η_Q ∘ f = ΔΣf ∘ η_P`, or `π_i ∘ (f1 × f2 × f3) = f_i ∘ π_i`, elementwise.
pub fn check_naturality(arrow: NaturalityArrow<'_>) -> Result<bool> {
    match arrow {
        NaturalityArrow::Unit(f) => {
            require_semisymmetric(f.dom(), "domain")?;
            require_semisymmetric(f.cod(), "codomain")?;
            let (n, m) = (f.dom().order(), f.cod().order());
            let left = compose_maps(&diagonal_map(m), f.map());
            let fff = product_map3(n, m, [f.map(), f.map(), f.map()]);
            let right = compose_maps(&fff, &diagonal_map(n));
            Ok(left == right)
        }
        NaturalityArrow::Counit(h) => {
            let (n, m) = (h.dom().order(), h.cod().order());
            let product = delta_arrow_map(h);
            let pi_dom = projection_maps(n);
            let pi_cod = projection_maps(m);
            Ok((0..3).all(|i| {
                compose_maps(&pi_cod[i], &product) == compose_maps(h.maps()[i], &pi_dom[i])
            }))
        }
    }
}

/// Functors from quasigroups with homotopies to semisymmetric quasigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functor {
    Delta,
    Gamma,
}

impl Functor {
    pub fn arrow_map(self, h: &Homotopy) -> Vec<usize> {
        match self {
            Functor::Delta => delta_arrow_map(h),
            Functor::Gamma => gamma_arrow_map(h),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Functor::Delta => "delta",
            Functor::Gamma => "gamma",
        }
    }
}

/// True iff the arrow map of `functor` is injective on all homotopies `q → r`.
pub fn check_faithful(
    q: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    functor: Functor,
    budget: Budget,
) -> Result<bool> {
    let arrows = enumerate_homotopies(q, r, budget)?;
    let images: HashSet<Vec<usize>> = arrows.iter().map(|h| functor.arrow_map(h)).collect();
    Ok(images.len() == arrows.len())
}

/// How objects are mapped for an injectivity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectFunctor {
    Delta,
    GammaTagged,
    GammaUntagged,
}

/// Two same-order sources `left`, `right` (list positions) with `x·y ≠ x·'y`, so
/// that `(x,x,x) ∇₃ (y,y,y)` differs between their `Δ`-images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalWitness {
    pub left: usize,
    pub right: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InjectivityReport {
    /// Pairs of distinct sources (list positions, `i < j`) with equal images.
    pub collisions: Vec<(usize, usize)>,
    pub witnesses: Vec<DiagonalWitness>,
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        self.collisions.is_empty()
    }
}

fn first_difference(a: &Quasigroup, b: &Quasigroup) -> Option<(usize, usize)> {
    let n = a.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| a.mul(x, y) != b.mul(x, y))
}

/// Compares images of every pair of distinct sources. Identical sources in
/// `qs` are the same object and are skipped.
pub fn check_object_injectivity(qs: &[Quasigroup], functor: ObjectFunctor) -> InjectivityReport {
    let mut report = InjectivityReport::default();
    match functor {
        ObjectFunctor::Delta => {
            let images: Vec<Quasigroup> = qs.iter().map(delta_object).collect();
            for i in 0..qs.len() {
                for j in i + 1..qs.len() {
                    if qs[i] == qs[j] {
                        continue;
                    }
                    if qs[i].order() != qs[j].order() {
                        // different carriers give different cubes
                        if images[i] == images[j] {
                            report.collisions.push((i, j));
                        }
                        continue;
                    }
                    let (x, y) = first_difference(&qs[i], &qs[j]).expect("distinct tables differ");
                    let idx = TripleIndex::new(qs[i].order());
                    let (dx, dy) = (idx.encode([x, x, x]), idx.encode([y, y, y]));
                    if images[i].mul(dx, dy) != images[j].mul(dx, dy) {
                        report.witnesses.push(DiagonalWitness {
                            left: i,
                            right: j,
                            x,
                            y,
                        });
                    } else {
                        report.collisions.push((i, j));
                    }
                }
            }
        }
        ObjectFunctor::GammaTagged => {
            let images: Vec<_> = qs.iter().map(gamma_tagged).collect();
            push_collisions(qs, &images, &mut report);
        }
        ObjectFunctor::GammaUntagged => {
            let images: Vec<_> = qs
                .iter()
                .map(|q| gamma_table(q, GammaVariant::V12))
                .collect();
            push_collisions(qs, &images, &mut report);
        }
    }
    report
}

fn push_collisions<T: PartialEq>(qs: &[Quasigroup], images: &[T], report: &mut InjectivityReport) {
    for i in 0..qs.len() {
        for j in i + 1..qs.len() {
            if qs[i] != qs[j] && images[i] == images[j] {
                report.collisions.push((i, j));
            }
        }
    }
}

/// How the large algebra equation is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfMode {
    Exhaustive,
    /// `points` pseudo-random elements drawn by [`Lcg`] from `seed`.
    Sample {
        points: u64,
        seed: u64,
    },
}

/// 64-bit linear congruential generator (Knuth's MMIX constants).
///
/// Used for reproducible sampling; the exact sequence is part of the contract.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    const MUL: u64 = 6364136223846793005;
    const INC: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    fn step(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(Self::MUL).wrapping_add(Self::INC);
        self.state >> 32
    }

    pub fn next_u64(&mut self) -> u64 {
        (self.step() << 32) | self.step()
    }

    /// Uniform-ish index in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GfAlgebraReport {
    /// `h ∘ η = 1`, checked on every element of `ΔQ`.
    pub unit_law: bool,
    /// `h ∘ GFh = h ∘ Gε_FC` on the checked points.
    pub main_law: bool,
    /// `h : ΔΣΔQ → ΔQ` preserves `∇₃` on the checked pairs.
    pub structure_homomorphism: bool,
    pub points_checked: u64,
}

impl GfAlgebraReport {
    pub fn holds(&self) -> bool {
        self.unit_law && self.main_law && self.structure_homomorphism
    }
}

/// Checks that `KQ = (ΔQ, π1 × π2 × π3)` satisfies both algebra equations.
///
/// The structure map sends `(ā, b̄, c̄) ∈ (Q³)³` to `(a1, b2, c3)`. The main
/// equation lives on `((Q³)³)³`, which has `n²⁷` elements, so exhaustive mode
/// is guarded by `budget`.
pub fn check_gf_algebra(q: &Quasigroup, mode: GfMode, budget: Budget) -> Result<GfAlgebraReport> {
    let n = q.order();
    let base = TripleIndex::new(n);
    let nn = base.size();
    let cube = TripleIndex::new(nn);
    let h = |i: usize| {
        let [a, b, c] = cube.decode(i);
        base.encode([base.decode(a)[0], base.decode(b)[1], base.decode(c)[2]])
    };

    let unit_law = (0..nn).all(|x| h(cube.encode([x, x, x])) == x);

    let top = search_space(n, 27);
    let cube_size = cube.size();
    let main_at = |idx: u128| {
        let w = (idx % cube_size as u128) as usize;
        let v = ((idx / cube_size as u128) % cube_size as u128) as usize;
        let u = (idx / (cube_size as u128 * cube_size as u128)) as usize;
        let lhs = h(cube.encode([h(u), h(v), h(w)]));
        let rhs = h(cube.encode([cube.decode(u)[0], cube.decode(v)[1], cube.decode(w)[2]]));
        lhs == rhs
    };

    let carrier = delta_object(q);
    let outer = DeltaView::new(&carrier);
    let hom_at = |a: usize, b: usize| h(outer.mul(a, b)) == carrier.mul(h(a), h(b));

    let (main_law, structure_homomorphism, points_checked) = match mode {
        GfMode::Exhaustive => {
            budget.ensure(top)?;
            let pairs = (cube_size as u128) * (cube_size as u128);
            budget.ensure(pairs)?;
            let main = (0..top).all(main_at);
            let hom = (0..cube_size).all(|a| (0..cube_size).all(|b| hom_at(a, b)));
            (main, hom, top as u64)
        }
        GfMode::Sample { points, seed } => {
            let mut rng = Lcg::new(seed);
            let bound = u64::try_from(top).unwrap_or(u64::MAX);
            let mut main = true;
            let mut hom = true;
            for _ in 0..points {
                main &= main_at(u128::from(rng.below(bound)));
                let a = rng.below(cube_size as u64) as usize;
                let b = rng.below(cube_size as u64) as usize;
                hom &= hom_at(a, b);
            }
            (main, hom, points)
        }
    };
    Ok(GfAlgebraReport {
        unit_law,
        main_law,
        structure_homomorphism,
        points_checked,
    })
}

/// Largest source order for the algebra-morphism search.
pub const ALGEBRA_MORPHISM_MAX_ORDER: usize = 2;

/// Maps `ΔQ → ΔR` that are homomorphisms and morphisms of the induced algebras,
/// i.e. `f(a1, b2, c3) = (π1 f(ā), π2 f(b̄), π3 f(c̄))` for all `ā, b̄, c̄`.
pub fn algebra_morphisms(q: &Quasigroup, r: &Quasigroup) -> Result<Vec<Vec<usize>>> {
    for order in [q.order(), r.order()] {
        if order > ALGEBRA_MORPHISM_MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: ALGEBRA_MORPHISM_MAX_ORDER,
            });
        }
    }
    let (dq, dr) = (delta_object(q), delta_object(r));
    let (qi, ri) = (TripleIndex::new(q.order()), TripleIndex::new(r.order()));
    let homs = homomorphisms_between(&dq, &dr, Budget::DEFAULT)?;
    let size = qi.size();
    let is_algebra_morphism = |f: &Vec<usize>| {
        (0..size).all(|a| {
            (0..size).all(|b| {
                (0..size).all(|c| {
                    let lhs = f[qi.encode([qi.decode(a)[0], qi.decode(b)[1], qi.decode(c)[2]])];
                    let rhs =
                        ri.encode([ri.decode(f[a])[0], ri.decode(f[b])[1], ri.decode(f[c])[2]]);
                    lhs == rhs
                })
            })
        })
    };
    Ok(homs.into_iter().filter(is_algebra_morphism).collect())
}

/// `f_i(u) = π_i(f(u, u, u))`.
pub fn extract_components(f: &[usize], n_dom: usize, n_cod: usize) -> [Vec<usize>; 3] {
    let (qi, ri) = (TripleIndex::new(n_dom), TripleIndex::new(n_cod));
    [0, 1, 2].map(|i| {
        (0..n_dom)
            .map(|u| ri.decode(f[qi.encode([u, u, u])])[i])
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphismReport {
    pub maps_found: usize,
    /// Every found map equals `f1 × f2 × f3` for its extracted components.
    pub all_products: bool,
    /// Every extracted triple is a homotopy.
    pub all_homotopies: bool,
}

impl AlgebraMorphismReport {
    pub fn holds(&self) -> bool {
        self.all_products && self.all_homotopies
    }
}

/// Every algebra morphism `KQ → KR` decomposes as `f1 × f2 × f3` for a homotopy.
pub fn check_algebra_morphism_form(
    q: &Quasigroup,
    r: &Quasigroup,
) -> Result<AlgebraMorphismReport> {
    let maps = algebra_morphisms(q, r)?;
    let (n, m) = (q.order(), r.order());
    let mut report = AlgebraMorphismReport {
        maps_found: maps.len(),
        all_products: true,
        all_homotopies: true,
    };
    for f in &maps {
        let comps = extract_components(f, n, m);
        let [f1, f2, f3] = &comps;
        report.all_products &= product_map3(n, m, [f1, f2, f3]) == *f;
        report.all_homotopies &= is_homotopy(q, r, [f1, f2, f3])?;
    }
    Ok(report)
}

/// Largest `Δ`-image order the probe searches for isomorphisms.
pub const PROBE_MAX_DELTA_ORDER: usize = 27;

/// Independent facts about a pair of quasigroups. `None` means undetermined
/// because a search was out of budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeReport {
    pub isotopic: Option<bool>,
    pub delta_iso: Option<bool>,
    pub gamma_tables_equal: bool,
}

impl ProbeReport {
    pub fn is_complete(&self) -> bool {
        self.isotopic.is_some() && self.delta_iso.is_some()
    }
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<bool>| v.map_or("unknown".to_string(), |b| b.to_string());
        write!(
            f,
            "isotopic={} delta_iso={} gamma_tables_equal={}",
            show(self.isotopic),
            show(self.delta_iso),
            self.gamma_tables_equal
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source} (partial report: {partial})")]
pub struct ProbeBudgetError {
    pub partial: ProbeReport,
    #[source]
    pub source: Error,
}

/// Records whether `q` and `r` are isotopic, whether `Δq ≅ Δr`, and whether
/// their `Γ` tables coincide. No relation between the three is assumed.
pub fn probe_isotopy_vs_ss_iso(
    q: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    budget: Budget,
) -> Result<ProbeReport, ProbeBudgetError> {
    let mut report = ProbeReport {
        isotopic: None,
        delta_iso: None,
        gamma_tables_equal: q.order() == r.order()
            && gamma_table(q, GammaVariant::V12) == gamma_table(r, GammaVariant::V12),
    };
    let mut failure = None;

    match find_isotopy(q, r, budget) {
        Ok(found) => report.isotopic = Some(found.is_some()),
        Err(e) => failure = Some(e),
    }

    let cube = q.order().pow(3).max(r.order().pow(3));
    if cube <= PROBE_MAX_DELTA_ORDER {
        let (dq, dr) = (delta_object(q), delta_object(r));
        report.delta_iso = Some(find_isomorphism(&dq, &dr).is_some());
    } else if failure.is_none() {
        failure = Some(Error::OrderTooLarge {
            order: cube,
            max: PROBE_MAX_DELTA_ORDER,
        });
    }

    match failure {
        None => Ok(report),
        Some(source) => Err(ProbeBudgetError {
            partial: report,
            source,
        }),
    }
}

/// Per-object adjunction data for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub semisymmetric: bool,
    /// The diagonal `Q → ΔQ` is a homomorphism.
    pub diagonal_homomorphism: bool,
    pub counit_homotopy: bool,
    pub counit_surjective: bool,
    /// `η_ΔQ : ΔQ → ΔΔQ` is a homomorphism (checked lazily on `ΔΔQ`).
    pub unit_on_delta: bool,
    pub triangle_delta: bool,
    /// `π_i ∘ η_Q = 1`; only meaningful for semisymmetric `Q`.
    pub triangle_sigma: Option<bool>,
}

impl AdjunctionReport {
    /// The diagonal is a homomorphism exactly when `Q` is semisymmetric, and
    /// every other component holds.
    pub fn holds(&self) -> bool {
        self.diagonal_homomorphism == self.semisymmetric
            && self.counit_homotopy
            && self.counit_surjective
            && self.unit_on_delta
            && self.triangle_delta
            && self.triangle_sigma.unwrap_or(true)
    }
}

pub fn adjunction_report(q: &Quasigroup) -> AdjunctionReport {
    let n = q.order();
    let semisymmetric = q.is_semisymmetric();
    let dq = delta_object(q);
    let [p1, p2, p3] = projection_maps(n);
    let counit_homotopy = is_homotopy(&dq, q, [&p1, &p2, &p3]).expect("projections are total");
    let counit_surjective = [&p1, &p2, &p3].iter().all(|p| {
        let image: HashSet<_> = p.iter().collect();
        image.len() == n
    });
    let unit_on_delta = diagonal_is_homomorphism(&dq);
    let (triangle_delta, triangle_sigma) = if semisymmetric {
        let (a, b) = check_triangular(q, q).expect("q is semisymmetric");
        (a, Some(b))
    } else {
        let (a, _) = check_triangular(q, &dq).expect("delta images are semisymmetric");
        (a, None)
    };
    AdjunctionReport {
        semisymmetric,
        diagonal_homomorphism: diagonal_is_homomorphism(q),
        counit_homotopy,
        counit_surjective,
        unit_on_delta,
        triangle_delta,
        triangle_sigma,
    }
}

/// Unit naturality for every homomorphism `p → r` (both semisymmetric) and
/// counit naturality for every homotopy `p → r`. Returns `(unit, counit)`.
pub fn naturality_sweep(
    p: &Arc<Quasigroup>,
    r: &Arc<Quasigroup>,
    budget: Budget,
) -> Result<(bool, bool)> {
    let unit = if p.is_semisymmetric() && r.is_semisymmetric() {
        let homs = morphisms::enumerate_homomorphisms(p, r, budget)?;
        homs.iter()
            .map(|f| check_naturality(NaturalityArrow::Unit(f)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b)
    } else {
        true
    };
    let homotopies = enumerate_homotopies(p, r, budget)?;
    let counit = homotopies
        .iter()
        .map(|h| check_naturality(NaturalityArrow::Counit(h)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    Ok((unit, counit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ErrorKind;

    fn arc(q: Quasigroup) -> Arc<Quasigroup> {
        Arc::new(q)
    }

    fn z2() -> Arc<Quasigroup> {
        arc(Quasigroup::cyclic(2).unwrap())
    }

    fn z2_oplus() -> Arc<Quasigroup> {
        arc(Quasigroup::from_fn(2, |x, y| (x + y + 1) % 2).unwrap())
    }

    #[test]
    fn unit_examples() {
        let eta = unit_arrow(&z2()).unwrap();
        assert_eq!(eta.cod().order(), 8);
        assert_eq!(eta.map(), &[0, 7]);
        assert!(unit_arrow(&arc(Quasigroup::trivial())).is_ok());

        let z3 = arc(Quasigroup::cyclic(3).unwrap());
        let err = unit_arrow(&z3).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Precondition);
        assert!(!diagonal_is_homomorphism(&z3));
    }

    #[test]
    fn counit_examples() {
        let eps = counit_arrow(&z2());
        assert_eq!(eps.dom().order(), 8);
        assert_eq!(counit_arrow(&arc(Quasigroup::trivial())).dom().order(), 1);
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(check_triangular(&z2(), &z2()), Ok((true, true)));
        let t = Quasigroup::trivial();
        assert_eq!(check_triangular(&t, &t), Ok((true, true)));
        let z3 = Quasigroup::cyclic(3).unwrap();
        assert!(check_triangular(&z3, &z3).is_err());
        assert_eq!(check_triangular(&z3, &delta_object(&z3)), Ok((true, true)));
    }

    #[test]
    fn naturality_of_identities() {
        let id = Homomorphism::identity(z2());
        assert_eq!(check_naturality(NaturalityArrow::Unit(&id)), Ok(true));
        let idh = Homotopy::identity(arc(Quasigroup::cyclic(3).unwrap()));
        assert_eq!(check_naturality(NaturalityArrow::Counit(&idh)), Ok(true));
        let z3id = Homomorphism::identity(arc(Quasigroup::cyclic(3).unwrap()));
        assert!(check_naturality(NaturalityArrow::Unit(&z3id)).is_err());
    }

    #[test]
    fn faithful_examples() {
        for f in [Functor::Delta, Functor::Gamma] {
            assert_eq!(check_faithful(&z2(), &z2(), f, Budget::DEFAULT), Ok(true));
            let t = arc(Quasigroup::trivial());
            assert_eq!(check_faithful(&t, &t, f, Budget::DEFAULT), Ok(true));
        }
        let z3 = arc(Quasigroup::cyclic(3).unwrap());
        assert!(check_faithful(&z3, &z3, Functor::Delta, Budget(10)).is_err());
    }

    #[test]
    fn gamma_pair_collides_untagged_only() {
        let qs = vec![(*z2()).clone(), (*z2_oplus()).clone()];
        let un = check_object_injectivity(&qs, ObjectFunctor::GammaUntagged);
        assert_eq!(un.collisions, vec![(0, 1)]);
        assert!(check_object_injectivity(&qs, ObjectFunctor::GammaTagged).is_injective());
        let d = check_object_injectivity(&qs, ObjectFunctor::Delta);
        assert!(d.is_injective());
        assert_eq!(d.witnesses.len(), 1);
    }

    #[test]
    fn gf_algebra_small() {
        let t = Quasigroup::trivial();
        let r = check_gf_algebra(&t, GfMode::Exhaustive, Budget::DEFAULT).unwrap();
        assert!(r.holds());
        assert_eq!(r.points_checked, 1);
        let z = check_gf_algebra(
            &z2(),
            GfMode::Sample {
                points: 1000,
                seed: 1,
            },
            Budget::DEFAULT,
        )
        .unwrap();
        assert!(z.holds());
        assert!(check_gf_algebra(&z2(), GfMode::Exhaustive, Budget::DEFAULT).is_err());
    }

    #[test]
    fn lcg_is_deterministic() {
        let a: Vec<u64> = {
            let mut g = Lcg::new(1);
            (0..5).map(|_| g.next_u64()).collect()
        };
        let mut g = Lcg::new(1);
        let b: Vec<u64> = (0..5).map(|_| g.next_u64()).collect();
        assert_eq!(a, b);
        assert!(Lcg::new(7).below(10) < 10);
    }

    #[test]
    fn algebra_morphism_guard() {
        let z3 = Quasigroup::cyclic(3).unwrap();
        let err = check_algebra_morphism_form(&z3, &z3).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::Resource);
        let t = Quasigroup::trivial();
        assert!(check_algebra_morphism_form(&t, &t).unwrap().holds());
    }

    #[test]
    fn probe_self_pair() {
        let q = z2();
        let p = probe_isotopy_vs_ss_iso(&q, &q, Budget::DEFAULT).unwrap();
        assert_eq!(
            p,
            ProbeReport {
                isotopic: Some(true),
                delta_iso: Some(true),
                gamma_tables_equal: true
            }
        );
    }

    #[test]
    fn probe_reports_partial_on_budget() {
        let q = arc(Quasigroup::cyclic(4).unwrap());
        let err = probe_isotopy_vs_ss_iso(&q, &q, Budget(10)).unwrap_err();
        assert_eq!(err.partial.isotopic, None);
        assert_eq!(err.partial.delta_iso, None);
        assert!(err.partial.gamma_tables_equal);
        assert_eq!(err.source.kind(), ErrorKind::Resource);
    }
}
