use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qcore::table::OpTable;

/// Anything with a finite carrier `{0, …, n-1}` and a total binary operation.
///
/// Lets the homomorphism checks run against lazily evaluated products as well as
/// materialized tables.
pub trait Magma {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
}

/// A finite quasigroup `(Q; ·, /, \)` with both division tables materialized.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    mul: OpTable,
    rdiv: OpTable,
    ldiv: OpTable,
}

impl Quasigroup {
    /// Builds a quasigroup from its multiplication table, deriving the divisions.
    pub fn from_table(mul: OpTable) -> Result<Self> {
        if !mul.is_latin() {
            return Err(Error::NotLatin);
        }
        let n = mul.order();
        let mut rdiv = vec![0; n * n];
        let mut ldiv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = mul.get(x, y);
                // z / y = x and x \ z = y
                rdiv[z * n + y] = x;
                ldiv[x * n + z] = y;
            }
        }
        Ok(Quasigroup {
            rdiv: OpTable::from_cells(n, rdiv)?,
            ldiv: OpTable::from_cells(n, ldiv)?,
            mul,
        })
    }

    pub fn from_mul_table<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        Self::from_table(OpTable::from_rows(rows)?)
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                cells.push(f(a, b));
            }
        }
        Self::from_table(OpTable::from_cells(order, cells)?)
    }

    /// The cyclic group `(Z_n, +)`.
    pub fn cyclic(order: usize) -> Result<Self> {
        Self::from_fn(order, |a, b| (a + b) % order.max(1))
    }

    /// The single-element quasigroup.
    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order-1 table is Latin")
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    pub fn mul_table(&self) -> &OpTable {
        &self.mul
    }

    pub fn rdiv_table(&self) -> &OpTable {
        &self.rdiv
    }

    pub fn ldiv_table(&self) -> &OpTable {
        &self.ldiv
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    /// `a / b`: the unique `x` with `x · b = a`.
    #[inline]
    pub fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv.get(a, b)
    }

    /// `a \ b`: the unique `y` with `a · y = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv.get(a, b)
    }

    /// `a ⫽ b = b / a`.
    #[inline]
    pub fn dual_rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv.get(b, a)
    }

    /// `a ⑊ b = b \ a`.
    #[inline]
    pub fn dual_ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv.get(b, a)
    }

    #[inline]
    pub fn op(&self, kind: ParastropheKind, a: usize, b: usize) -> usize {
        match kind {
            ParastropheKind::Mul => self.mul(a, b),
            ParastropheKind::RDiv => self.rdiv(a, b),
            ParastropheKind::LDiv => self.ldiv(a, b),
            ParastropheKind::DualMul => self.mul(b, a),
            ParastropheKind::DualRDiv => self.dual_rdiv(a, b),
            ParastropheKind::DualLDiv => self.dual_ldiv(a, b),
        }
    }

    /// Range-checked [`Quasigroup::op`].
    pub fn apply(&self, kind: ParastropheKind, a: usize, b: usize) -> Result<usize> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.op(kind, a, b))
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: a,
                order: self.order(),
            })
        }
    }

    /// The quasigroup whose multiplication is the given parastrophe of this one.
    pub fn parastrophe(&self, kind: ParastropheKind) -> Quasigroup {
        if kind == ParastropheKind::Mul {
            return self.clone();
        }
        let table = OpTable::from_fn(self.order(), |a, b| self.op(kind, a, b));
        Quasigroup::from_table(table).expect("parastrophes of a quasigroup are Latin")
    }

    pub fn semisymmetry_report(&self) -> SemisymmetryReport {
        let n = self.order();
        let mut report = SemisymmetryReport {
            ss1: true,
            ss2: true,
            rdiv_is_opposite: true,
            ldiv_is_opposite: true,
            divisions_agree: true,
        };
        for x in 0..n {
            for y in 0..n {
                let yx = self.mul(y, x);
                report.ss1 &= self.mul(x, yx) == y;
                report.ss2 &= self.mul(self.mul(x, y), x) == y;
                report.rdiv_is_opposite &= self.rdiv(x, y) == yx;
                report.ldiv_is_opposite &= self.ldiv(x, y) == yx;
                report.divisions_agree &= self.ldiv(x, y) == self.rdiv(x, y);
            }
        }
        report
    }

    pub fn is_semisymmetric(&self) -> bool {
        self.semisymmetry_report().all()
    }
}

impl Magma for Quasigroup {
    fn order(&self) -> usize {
        Quasigroup::order(self)
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        Quasigroup::mul(self, a, b)
    }
}

impl fmt::Debug for Quasigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quasigroup")
            .field("mul", &self.mul)
            .finish()
    }
}

/// The six parastrophes `·, /, \, *, ⫽, ⑊`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParastropheKind {
    Mul,
    RDiv,
    LDiv,
    DualMul,
    DualRDiv,
    DualLDiv,
}

impl ParastropheKind {
    pub const ALL: [ParastropheKind; 6] = [
        ParastropheKind::Mul,
        ParastropheKind::RDiv,
        ParastropheKind::LDiv,
        ParastropheKind::DualMul,
        ParastropheKind::DualRDiv,
        ParastropheKind::DualLDiv,
    ];

    /// The kind computing `self(b, a)`.
    pub fn dual(self) -> ParastropheKind {
        use ParastropheKind::*;
        match self {
            Mul => DualMul,
            RDiv => DualRDiv,
            LDiv => DualLDiv,
            DualMul => Mul,
            DualRDiv => RDiv,
            DualLDiv => LDiv,
        }
    }

    pub fn name(self) -> &'static str {
        use ParastropheKind::*;
        match self {
            Mul => "mul",
            RDiv => "rdiv",
            LDiv => "ldiv",
            DualMul => "dual-mul",
            DualRDiv => "dual-rdiv",
            DualLDiv => "dual-ldiv",
        }
    }
}

impl fmt::Display for ParastropheKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParastropheKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParastropheKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown parastrophe '{s}'"))
    }
}

/// Cellwise truth of the five semisymmetry identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemisymmetryReport {
    /// `x · yx = y`
    pub ss1: bool,
    /// `xy · x = y`
    pub ss2: bool,
    /// `x / y = yx`
    pub rdiv_is_opposite: bool,
    /// `x \ y = yx`
    pub ldiv_is_opposite: bool,
    /// `x \ y = x / y`
    pub divisions_agree: bool,
}

impl SemisymmetryReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.ss1,
            self.ss2,
            self.rdiv_is_opposite,
            self.ldiv_is_opposite,
            self.divisions_agree,
        ]
    }

    pub fn all(&self) -> bool {
        self.flags().iter().all(|&f| f)
    }

    pub fn all_equal(&self) -> bool {
        let flags = self.flags();
        flags.iter().all(|&f| f == flags[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ParastropheKind::*;

    fn z2() -> Quasigroup {
        Quasigroup::cyclic(2).unwrap()
    }

    fn z3() -> Quasigroup {
        Quasigroup::cyclic(3).unwrap()
    }

    fn neg_sum3() -> Quasigroup {
        Quasigroup::from_mul_table(&[[0, 2, 1], [2, 1, 0], [1, 0, 2]]).unwrap()
    }

    #[test]
    fn order_one_tables() {
        let q = Quasigroup::from_mul_table(&[[0]]).unwrap();
        assert_eq!(q.mul_table().cells(), &[0]);
        assert_eq!(q.rdiv_table().cells(), &[0]);
        assert_eq!(q.ldiv_table().cells(), &[0]);
    }

    #[test]
    fn z2_divisions() {
        let q = z2();
        assert_eq!(q.rdiv_table().cells(), &[0, 1, 1, 0]);
        assert_eq!(q.ldiv_table().cells(), &[0, 1, 1, 0]);
    }

    #[test]
    fn z3_divisions() {
        let q = z3();
        for b in 0..3 {
            for a in 0..3 {
                assert_eq!(q.rdiv(b, a), (b + 3 - a) % 3);
                assert_eq!(q.ldiv(a, b), (b + 3 - a) % 3);
            }
        }
    }

    #[test]
    fn non_latin_rejected() {
        assert_eq!(
            Quasigroup::from_mul_table(&[[0, 0], [1, 1]]),
            Err(Error::NotLatin)
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(z2().apply(DualRDiv, 0, 1), Ok(1));
        assert_eq!(z3().apply(LDiv, 1, 0), Ok(2));
        let q = neg_sum3();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(q.apply(Mul, a, b), q.apply(DualMul, b, a));
            }
        }
        assert!(matches!(
            z3().apply(Mul, 3, 0),
            Err(Error::ElementOutOfRange {
                element: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn parastrophe_examples() {
        assert_eq!(z2().parastrophe(DualMul), z2());
        let r = z3().parastrophe(RDiv);
        for b in 0..3 {
            for a in 0..3 {
                assert_eq!(r.mul(b, a), (b + 3 - a) % 3);
            }
        }
        assert_eq!(z3().parastrophe(Mul), z3());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ParastropheKind::ALL {
            assert_eq!(k.name().parse::<ParastropheKind>(), Ok(k));
            assert_eq!(k.dual().dual(), k);
        }
        assert!("nope".parse::<ParastropheKind>().is_err());
    }

    #[test]
    fn semisymmetry_examples() {
        assert_eq!(z2().semisymmetry_report().flags(), [true; 5]);
        assert_eq!(z3().semisymmetry_report().flags(), [false; 5]);
        assert_eq!(neg_sum3().semisymmetry_report().flags(), [true; 5]);
        assert!(Quasigroup::trivial().is_semisymmetric());
    }
}
