use crate::error::{Error, Result};
use crate::qcore::quasigroup::Quasigroup;
use crate::qcore::table::OpTable;

/// An algebra `(Q; ⫽, ⑊, ·)` given by three operation tables.
///
/// The tables are stored as given; [`TwistedQuasigroup::is_twisted`] decides
/// whether they satisfy the twisted quasigroup axioms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistedQuasigroup {
    op1: OpTable,
    op2: OpTable,
    op3: OpTable,
}

impl TwistedQuasigroup {
    /// Tables in the roles `⫽`, `⑊`, `·`. All three must have the same order.
    pub fn new(op1: OpTable, op2: OpTable, op3: OpTable) -> Result<Self> {
        for other in [&op2, &op3] {
            if other.order() != op1.order() {
                return Err(Error::OrderMismatch {
                    left: op1.order(),
                    right: other.order(),
                });
            }
        }
        Ok(TwistedQuasigroup { op1, op2, op3 })
    }

    /// `(Q; ⫽, ⑊, ·)` built from the dual divisions of `q`.
    pub fn from_quasigroup(q: &Quasigroup) -> Self {
        TwistedQuasigroup {
            op1: q.rdiv_table().transpose(),
            op2: q.ldiv_table().transpose(),
            op3: q.mul_table().clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.op3.order()
    }

    pub fn tables(&self) -> [&OpTable; 3] {
        [&self.op1, &self.op2, &self.op3]
    }

    /// Checks, at every cell,
    /// `y ⫽ xy = x`, `xy ⑊ x = y`, `(y ⫽ x) y = x` and `x (y ⑊ x) = y`.
    pub fn is_twisted(&self) -> bool {
        let (o1, o2, o3) = (&self.op1, &self.op2, &self.op3);
        let n = self.order();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = o3.get(x, y);
                o1.get(y, xy) == x
                    && o2.get(xy, x) == y
                    && o3.get(o1.get(y, x), y) == x
                    && o3.get(x, o2.get(y, x)) == y
            })
        })
    }

    /// Twisted and semisymmetric: `·` satisfies SS1 and SS2, and `⫽ = · = ⑊`.
    pub fn is_semisymmetric_twisted(&self) -> bool {
        if !self.is_twisted() || self.op1 != self.op3 || self.op2 != self.op3 {
            return false;
        }
        let o3 = &self.op3;
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| o3.get(x, o3.get(y, x)) == y && o3.get(o3.get(x, y), x) == y))
    }

    /// `(⫽, ⑊, ·) ↦ (⑊, ·, ⫽)`.
    pub fn cyclic_rotate(&self) -> TwistedQuasigroup {
        TwistedQuasigroup {
            op1: self.op2.clone(),
            op2: self.op3.clone(),
            op3: self.op1.clone(),
        }
    }
}

/// The reduct `(Q; ⫽, ⑊)` of a quasigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Biquasigroup {
    op_r: OpTable,
    op_l: OpTable,
}

impl Biquasigroup {
    pub fn new(op_r: OpTable, op_l: OpTable) -> Result<Self> {
        if op_r.order() != op_l.order() {
            return Err(Error::OrderMismatch {
                left: op_r.order(),
                right: op_l.order(),
            });
        }
        Ok(Biquasigroup { op_r, op_l })
    }

    pub fn from_quasigroup(q: &Quasigroup) -> Self {
        Biquasigroup {
            op_r: q.rdiv_table().transpose(),
            op_l: q.ldiv_table().transpose(),
        }
    }

    pub fn tables(&self) -> [&OpTable; 2] {
        [&self.op_r, &self.op_l]
    }

    /// Recovers `·` from `⫽` via `x · y = z ⇔ y ⫽ z = x`, returning it only if
    /// it is a quasigroup whose dual divisions are exactly this pair.
    pub fn reconstruct(&self) -> Option<Quasigroup> {
        let n = self.op_r.order();
        let mut mul = vec![usize::MAX; n * n];
        for y in 0..n {
            for z in 0..n {
                let x = self.op_r.get(y, z);
                let slot = &mut mul[x * n + y];
                if *slot != usize::MAX {
                    return None;
                }
                *slot = z;
            }
        }
        let q = Quasigroup::from_table(OpTable::from_cells(n, mul).ok()?).ok()?;
        (Biquasigroup::from_quasigroup(&q) == *self).then_some(q)
    }

    pub fn is_biquasigroup(&self) -> bool {
        self.reconstruct().is_some()
    }

    /// Semisymmetric iff `⑊ = ⫽`.
    pub fn is_semisymmetric(&self) -> bool {
        self.is_biquasigroup() && self.op_r == self.op_l
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_duals_are_twisted() {
        let t = TwistedQuasigroup::from_quasigroup(&Quasigroup::cyclic(2).unwrap());
        assert!(t.is_twisted());
        assert!(t.is_semisymmetric_twisted());
    }

    #[test]
    fn z3_mul_thrice_is_not_twisted() {
        let m = Quasigroup::cyclic(3).unwrap().mul_table().clone();
        let t = TwistedQuasigroup::new(m.clone(), m.clone(), m).unwrap();
        assert!(!t.is_twisted());
    }

    #[test]
    fn order_one_is_twisted() {
        let t = TwistedQuasigroup::from_quasigroup(&Quasigroup::trivial());
        assert!(t.is_twisted());
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = Quasigroup::cyclic(2).unwrap().mul_table().clone();
        let b = Quasigroup::cyclic(3).unwrap().mul_table().clone();
        assert!(matches!(
            TwistedQuasigroup::new(a.clone(), a.clone(), b.clone()),
            Err(Error::OrderMismatch { .. })
        ));
        assert!(Biquasigroup::new(a, b).is_err());
    }

    #[test]
    fn rotation_has_period_three() {
        let t = TwistedQuasigroup::from_quasigroup(&Quasigroup::cyclic(3).unwrap());
        assert_ne!(t.cyclic_rotate(), t);
        assert_eq!(t.cyclic_rotate().cyclic_rotate().cyclic_rotate(), t);
    }

    #[test]
    fn biquasigroup_reconstructs_source() {
        let q = Quasigroup::cyclic(3).unwrap();
        let b = Biquasigroup::from_quasigroup(&q);
        assert_eq!(b.reconstruct(), Some(q));
        assert!(!b.is_semisymmetric());
        let z2 = Biquasigroup::from_quasigroup(&Quasigroup::cyclic(2).unwrap());
        assert!(z2.is_semisymmetric());
    }

    #[test]
    fn mismatched_pair_is_not_a_biquasigroup() {
        let q = Quasigroup::cyclic(3).unwrap();
        let b = Biquasigroup::new(q.rdiv_table().transpose(), q.mul_table().clone()).unwrap();
        assert!(!b.is_biquasigroup());
    }
}
