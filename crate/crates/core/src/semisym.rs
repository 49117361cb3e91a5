//! Semisymmetrizations: the cube construction `Δ` on `Q³` and the square
//! construction `Γ` on `Q²`, together with their actions on homotopies.
//!
//! Tuples are encoded row-major with the first coordinate most significant.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Result;
use crate::morphisms::{Homomorphism, Homotopy};
use crate::qcore::{qgt, Magma, OpTable, Quasigroup, TwistedQuasigroup};

/// Encoding of `(x1, x2, x3) ∈ Q³` as `x1·n² + x2·n + x3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleIndex {
    n: usize,
}

impl TripleIndex {
    pub fn new(n: usize) -> Self {
        TripleIndex { n }
    }

    pub fn size(&self) -> usize {
        self.n * self.n * self.n
    }

    #[inline]
    pub fn encode(&self, [x1, x2, x3]: [usize; 3]) -> usize {
        (x1 * self.n + x2) * self.n + x3
    }

    #[inline]
    pub fn decode(&self, i: usize) -> [usize; 3] {
        let n = self.n;
        [i / (n * n), (i / n) % n, i % n]
    }

    /// `(x1, x2, x3)' = (x2, x3, x1)`.
    pub fn rotate([x1, x2, x3]: [usize; 3]) -> [usize; 3] {
        [x2, x3, x1]
    }
}

/// Encoding of `(x1, x2) ∈ Q²` as `x1·n + x2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndex {
    n: usize,
}

impl PairIndex {
    pub fn new(n: usize) -> Self {
        PairIndex { n }
    }

    pub fn size(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn encode(&self, [x1, x2]: [usize; 2]) -> usize {
        x1 * self.n + x2
    }

    #[inline]
    pub fn decode(&self, i: usize) -> [usize; 2] {
        [i / self.n, i % self.n]
    }
}

/// `(x1,x2,x3) ⊗ (y1,y2,y3) = (x1 ⫽ y1, x2 ⑊ y2, x3 · y3)`.
pub fn otimes(q: &Quasigroup, x: [usize; 3], y: [usize; 3]) -> [usize; 3] {
    [
        q.dual_rdiv(x[0], y[0]),
        q.dual_ldiv(x[1], y[1]),
        q.mul(x[2], y[2]),
    ]
}

/// The direct product `(Q; ⫽) × (Q; ⑊) × (Q; ·)` on `Q³`.
pub fn otimes_cube(q: &Quasigroup) -> Quasigroup {
    let idx = TripleIndex::new(q.order());
    let table = OpTable::from_fn(idx.size(), |a, b| {
        idx.encode(otimes(q, idx.decode(a), idx.decode(b)))
    });
    Quasigroup::from_table(table).expect("direct product of quasigroups is Latin")
}

/// `x̄ ∇₃ ȳ = (x2 ⫽ y3, x3 ⑊ y1, x1 · y2)`.
#[inline]
pub fn nabla3(q: &Quasigroup, [x1, x2, x3]: [usize; 3], [y1, y2, y3]: [usize; 3]) -> [usize; 3] {
    [q.dual_rdiv(x2, y3), q.dual_ldiv(x3, y1), q.mul(x1, y2)]
}

/// The semisymmetrization `ΔQ = (Q³; ∇₃)` evaluated on demand.
///
/// Used where `ΔQ` is only needed as a multiplication, e.g. `ΔΔQ` at order 3,
/// which is too large to tabulate.
#[derive(Debug, Clone, Copy)]
pub struct DeltaView<'a> {
    base: &'a Quasigroup,
    idx: TripleIndex,
}

impl<'a> DeltaView<'a> {
    pub fn new(base: &'a Quasigroup) -> Self {
        DeltaView {
            base,
            idx: TripleIndex::new(base.order()),
        }
    }

    pub fn index(&self) -> TripleIndex {
        self.idx
    }
}

impl Magma for DeltaView<'_> {
    fn order(&self) -> usize {
        self.idx.size()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.idx
            .encode(nabla3(self.base, self.idx.decode(a), self.idx.decode(b)))
    }
}

/// `ΔQ`: the semisymmetric quasigroup `(Q³; ∇₃)`.
pub fn delta_object(q: &Quasigroup) -> Quasigroup {
    let view = DeltaView::new(q);
    let table = OpTable::from_fn(view.order(), |a, b| view.mul(a, b));
    Quasigroup::from_table(table).expect("semisymmetrization is Latin")
}

/// `(∇₁, ∇₂, ∇₃)` on `Q³`, where `∇₁` and `∇₂` are the dual divisions of `∇₃`.
///
/// For every `q` the three tables coincide.
pub fn twisted_semisymmetrization(q: &Quasigroup) -> TwistedQuasigroup {
    TwistedQuasigroup::from_quasigroup(&delta_object(q))
}

/// `f1 × f2 × f3` as a map on encoded triples.
pub fn product_map3(n_dom: usize, n_cod: usize, [f1, f2, f3]: [&[usize]; 3]) -> Vec<usize> {
    let di = TripleIndex::new(n_dom);
    let ci = TripleIndex::new(n_cod);
    (0..di.size())
        .map(|i| {
            let [x1, x2, x3] = di.decode(i);
            ci.encode([f1[x1], f2[x2], f3[x3]])
        })
        .collect()
}

/// `f1 × f2` as a map on encoded pairs.
pub fn product_map2(n_dom: usize, n_cod: usize, [f1, f2]: [&[usize]; 2]) -> Vec<usize> {
    let di = PairIndex::new(n_dom);
    let ci = PairIndex::new(n_cod);
    (0..di.size())
        .map(|i| {
            let [x1, x2] = di.decode(i);
            ci.encode([f1[x1], f2[x2]])
        })
        .collect()
}

/// The arrow map of `Δ` without building the objects.
pub fn delta_arrow_map(h: &Homotopy) -> Vec<usize> {
    product_map3(h.dom().order(), h.cod().order(), h.maps())
}

/// `Δ(f1, f2, f3) = f1 × f2 × f3 : ΔQ → ΔR`.
pub fn delta_arrow(h: &Homotopy) -> Homomorphism {
    delta_arrow_between(
        h,
        Arc::new(delta_object(h.dom())),
        Arc::new(delta_object(h.cod())),
    )
}

/// [`delta_arrow`] with precomputed `Δ`-images of the domain and codomain.
pub fn delta_arrow_between(
    h: &Homotopy,
    delta_dom: Arc<Quasigroup>,
    delta_cod: Arc<Quasigroup>,
) -> Homomorphism {
    Homomorphism::new_unchecked(delta_dom, delta_cod, delta_arrow_map(h))
}

/// The square semisymmetrizations. `V12` is the default `∇`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GammaVariant {
    #[default]
    V12,
    V23,
    /// The `∇₃₁` formula as printed, with `y2` as the final argument.
    V31Verbatim,
    /// The `∇₃₁` formula following the index pattern of `∇₁₂` and `∇₂₃` (`y1`).
    V31Symmetric,
}

impl GammaVariant {
    pub const ALL: [GammaVariant; 4] = [
        GammaVariant::V12,
        GammaVariant::V23,
        GammaVariant::V31Verbatim,
        GammaVariant::V31Symmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaVariant::V12 => "v12",
            GammaVariant::V23 => "v23",
            GammaVariant::V31Verbatim => "v31-verbatim",
            GammaVariant::V31Symmetric => "v31-symmetric",
        }
    }
}

impl fmt::Display for GammaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GammaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant '{s}'"))
    }
}

/// One cell of the square construction, with `∘1 = ⫽`, `∘2 = ⑊`, `∘3 = ·`.
pub fn gamma_mul(
    q: &Quasigroup,
    variant: GammaVariant,
    [x1, x2]: [usize; 2],
    [y1, y2]: [usize; 2],
) -> [usize; 2] {
    let o1 = |a, b| q.dual_rdiv(a, b);
    let o2 = |a, b| q.dual_ldiv(a, b);
    let o3 = |a, b| q.mul(a, b);
    match variant {
        GammaVariant::V12 => {
            let z = o3(x1, y2);
            [o1(x2, z), o2(z, y1)]
        }
        GammaVariant::V23 => {
            let z = o1(x1, y2);
            [o2(x2, z), o3(z, y1)]
        }
        GammaVariant::V31Verbatim => {
            let z = o2(x1, y2);
            [o3(x2, z), o1(z, y2)]
        }
        GammaVariant::V31Symmetric => {
            let z = o2(x1, y2);
            [o3(x2, z), o1(z, y1)]
        }
    }
}

/// The operation table of a square semisymmetrization, Latin or not.
pub fn gamma_table(q: &Quasigroup, variant: GammaVariant) -> OpTable {
    let idx = PairIndex::new(q.order());
    OpTable::from_fn(idx.size(), |a, b| {
        idx.encode(gamma_mul(q, variant, idx.decode(a), idx.decode(b)))
    })
}

/// `ΓQ = (Q², ∇)` for the chosen variant.
///
/// `V12` and `V23` always yield quasigroups; a variant whose table is not a
/// Latin square yields [`Error::NotLatin`](crate::error::Error::NotLatin).
pub fn gamma_object(q: &Quasigroup, variant: GammaVariant) -> Result<Quasigroup> {
    Quasigroup::from_table(gamma_table(q, variant))
}

fn gamma_v12(q: &Quasigroup) -> Quasigroup {
    gamma_object(q, GammaVariant::V12).expect("V12 square semisymmetrization is Latin")
}

/// The arrow map of `Γ` without building the objects.
pub fn gamma_arrow_map(h: &Homotopy) -> Vec<usize> {
    product_map2(h.dom().order(), h.cod().order(), [h.f1(), h.f2()])
}

/// `Γ(f1, f2, f3) = f1 × f2 : ΓQ → ΓR` (variant `V12`).
pub fn gamma_arrow(h: &Homotopy) -> Homomorphism {
    Homomorphism::new_unchecked(
        Arc::new(gamma_v12(h.dom())),
        Arc::new(gamma_v12(h.cod())),
        gamma_arrow_map(h),
    )
}

/// `ΓQ` carrying its source quasigroup, so distinct sources give distinct objects
/// even when their tables coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedQuasigroup {
    q: Quasigroup,
    tag: String,
}

impl TaggedQuasigroup {
    pub fn quasigroup(&self) -> &Quasigroup {
        &self.q
    }

    /// Canonical QGT serialization of the source.
    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn source(&self) -> Result<Quasigroup> {
        qgt::parse_quasigroup(&self.tag)
    }

    pub fn to_qgt(&self) -> String {
        qgt::write_tagged(self.q.mul_table(), &self.tag)
    }

    pub fn from_qgt(text: &str) -> Result<Self> {
        let (table, tag) = qgt::parse_tagged(text)?;
        Ok(TaggedQuasigroup {
            q: Quasigroup::from_table(table)?,
            tag,
        })
    }
}

pub fn gamma_tagged(q: &Quasigroup) -> TaggedQuasigroup {
    TaggedQuasigroup {
        q: gamma_v12(q),
        tag: qgt::write_quasigroup(q),
    }
}

/// `L_x̂(ŷ) = (x1 · y1, y2)`.
pub fn pair_left(q: &Quasigroup, x: [usize; 2], y: [usize; 2]) -> [usize; 2] {
    [q.mul(x[0], y[0]), y[1]]
}

/// `R_ŷ(x̂) = (x1, x2 · y2)`.
pub fn pair_right(q: &Quasigroup, y: [usize; 2], x: [usize; 2]) -> [usize; 2] {
    [x[0], q.mul(x[1], y[1])]
}

/// `(x1, x2)' = (x2, x1)`.
pub fn pair_swap([x1, x2]: [usize; 2]) -> [usize; 2] {
    [x2, x1]
}

/// `x̂ ∇ ŷ = R_ŷ(x̂') ⊗ L_x̂(ŷ')` with `⊗ = (⫽, ⑊)` componentwise.
pub fn gamma_mul_factored(q: &Quasigroup, x: [usize; 2], y: [usize; 2]) -> [usize; 2] {
    let r = pair_right(q, y, pair_swap(x));
    let l = pair_left(q, x, pair_swap(y));
    [q.dual_rdiv(r[0], l[0]), q.dual_ldiv(r[1], l[1])]
}
