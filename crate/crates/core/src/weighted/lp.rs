//! Exact feasibility of linear systems over the rationals.
//!
//! A system `A x <= b` (equalities split into two rows, plus the trivial row
//! `0 <= 1`) is feasible iff the auxiliary program
//!
//! ```text
//!   minimize  b·y   subject to   Aᵀ y = 0,   1·y = 1,   y >= 0
//! ```
//!
//! has a non-negative optimum. That program has only `d + 1` equality rows
//! for `d` variables, so its simplex tableau stays small no matter how many
//! constraints the system has. Its optimal simplex multipliers `(w, t)`
//! satisfy `A w + t <= b`, so `w` is a feasible point whenever `t >= 0`.
//!
//! Both answers are checked before they are returned: a feasible point by
//! substitution, infeasibility by the auxiliary program's own solution `y`,
//! which combines the rows into `0 <= b·y < 0`.
//!
//! Pivoting runs on `i128` fractions and restarts on arbitrary-precision
//! rationals if an intermediate value overflows.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x  (relation)  rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) -> Self {
        Self {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            relation,
            BigRational::from_integer(rhs.into()),
        )
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self
            .coeffs
            .iter()
            .zip(x)
            .map(|(c, v)| c * v)
            .fold(BigRational::zero(), |acc, t| acc + t);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub constraints: Vec<LinearConstraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, c: LinearConstraint) {
        assert_eq!(c.coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(c);
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        x.len() == self.num_vars && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<BigRational>),
    Infeasible,
}

/// Finds an exact rational point satisfying every constraint, or reports
/// that none exists. Variables are unrestricted in sign.
pub fn linear_feasibility(system: &LinearSystem) -> Feasibility {
    let result = small_rows(system)
        .and_then(|rows| solve::<Ratio<i128>>(system.num_vars, &rows))
        .unwrap_or_else(|| {
            let rows = big_rows(system);
            solve::<BigRational>(system.num_vars, &rows).expect("unbounded precision")
        });
    if let Feasibility::Feasible(x) = &result {
        assert!(
            system.is_satisfied_by(x),
            "solver returned a point violating the system"
        );
    }
    result
}

/// Field operations that may refuse on overflow.
trait Exact: Clone + PartialOrd + Zero + One {
    fn esub(&self, o: &Self) -> Option<Self>;
    fn emul(&self, o: &Self) -> Option<Self>;
    fn ediv(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn to_big(&self) -> BigRational;
}

impl Exact for Ratio<i128> {
    fn esub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn emul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn ediv(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Exact for BigRational {
    fn esub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn emul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn ediv(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

/// Rows `(a, b)` meaning `a · x <= b`.
type Rows<T> = Vec<(Vec<T>, T)>;

fn expand_rows<T: Exact>(system: &LinearSystem, conv: impl Fn(&BigRational) -> Option<T>) -> Option<Rows<T>> {
    let mut rows = Vec::new();
    for c in &system.constraints {
        let a: Vec<T> = c.coeffs.iter().map(&conv).collect::<Option<_>>()?;
        let b = conv(&c.rhs)?;
        let negated = || (a.iter().map(T::neg).collect::<Vec<_>>(), b.neg());
        match c.relation {
            Relation::Le => rows.push((a.clone(), b.clone())),
            Relation::Ge => rows.push(negated()),
            Relation::Eq => {
                rows.push(negated());
                rows.push((a.clone(), b.clone()));
            }
        }
    }
    rows.push((vec![T::zero(); system.num_vars], T::one()));
    Some(rows)
}

fn small_rows(system: &LinearSystem) -> Option<Rows<Ratio<i128>>> {
    expand_rows(system, |v| {
        Some(Ratio::new(v.numer().to_i128()?, v.denom().to_i128()?))
    })
}

fn big_rows(system: &LinearSystem) -> Rows<BigRational> {
    expand_rows(system, |v| Some(v.clone())).expect("no conversion needed")
}

struct Tableau<T> {
    /// `rows x cols` coefficients; the last `rows` columns are artificials.
    a: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    /// Reduced costs and the negated objective value.
    obj: Vec<T>,
    obj_rhs: T,
    structural: usize,
}

impl<T: Exact> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) -> Option<()> {
        let p = self.a[r][c].clone();
        for v in self.a[r].iter_mut() {
            *v = v.ediv(&p)?;
        }
        self.rhs[r] = self.rhs[r].ediv(&p)?;
        let (prow, prhs) = (self.a[r].clone(), self.rhs[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (v, pv) in self.a[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v = v.esub(&f.emul(pv)?)?;
                }
            }
            self.rhs[i] = self.rhs[i].esub(&f.emul(&prhs)?)?;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v = v.esub(&f.emul(pv)?)?;
                }
            }
            self.obj_rhs = self.obj_rhs.esub(&f.emul(&prhs)?)?;
        }
        self.basis[r] = c;
        Some(())
    }

    /// Bland's rule over structural columns until optimal.
    fn optimize(&mut self) -> Option<()> {
        loop {
            let Some(c) = (0..self.structural).find(|&c| self.obj[c].is_negative()) else {
                return Some(());
            };
            let mut best: Option<(usize, T)> = None;
            for r in 0..self.a.len() {
                if !self.a[r][c].is_positive() {
                    continue;
                }
                let ratio = self.rhs[r].ediv(&self.a[r][c])?;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            // The auxiliary program is bounded: its dual always has w = 0.
            let (r, _) = best.expect("auxiliary program is bounded");
            self.pivot(r, c)?;
        }
    }

    fn set_costs(&mut self, costs: &[T]) -> Option<()> {
        let width = self.obj.len();
        let mut obj: Vec<T> = (0..width)
            .map(|c| costs.get(c).cloned().unwrap_or_else(T::zero))
            .collect();
        let mut obj_rhs = T::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = costs.get(b).cloned().unwrap_or_else(T::zero);
            if cb.is_zero() {
                continue;
            }
            for (v, av) in obj.iter_mut().zip(&self.a[r]) {
                if !av.is_zero() {
                    *v = v.esub(&cb.emul(av)?)?;
                }
            }
            obj_rhs = obj_rhs.esub(&cb.emul(&self.rhs[r])?)?;
        }
        self.obj = obj;
        self.obj_rhs = obj_rhs;
        Some(())
    }
}

/// `y >= 0` with `yᵀ A = 0` and `yᵀ b < 0`: summing the rows with these
/// multipliers gives `0 <= negative`, so no point satisfies them all.
fn is_farkas_certificate<T: Exact>(d: usize, rows: &Rows<T>, y: &[BigRational]) -> bool {
    if y.iter().any(Signed::is_negative) {
        return false;
    }
    let mut combo = vec![BigRational::zero(); d];
    let mut rhs = BigRational::zero();
    for ((coeffs, b), yi) in rows.iter().zip(y) {
        if yi.is_zero() {
            continue;
        }
        for (c, a) in combo.iter_mut().zip(coeffs) {
            *c += yi * a.to_big();
        }
        rhs += yi * b.to_big();
    }
    combo.iter().all(Zero::is_zero) && Signed::is_negative(&rhs)
}

fn solve<T: Exact>(d: usize, rows: &Rows<T>) -> Option<Feasibility> {
    let m = rows.len();
    let height = d + 1;
    let width = m + height;
    let mut a = vec![vec![T::zero(); width]; height];
    for (i, (coeffs, _)) in rows.iter().enumerate() {
        for (j, v) in coeffs.iter().enumerate() {
            a[j][i] = v.clone();
        }
        a[d][i] = T::one();
    }
    for (r, row) in a.iter_mut().enumerate() {
        row[m + r] = T::one();
    }
    let mut rhs = vec![T::zero(); height];
    rhs[d] = T::one();
    let mut t = Tableau {
        a,
        rhs,
        basis: (m..width).collect(),
        obj: vec![T::zero(); width],
        obj_rhs: T::zero(),
        structural: m,
    };

    // phase one: drive the artificials to zero
    let phase_one: Vec<T> = (0..width)
        .map(|c| if c >= m { T::one() } else { T::zero() })
        .collect();
    t.set_costs(&phase_one)?;
    t.optimize()?;
    debug_assert!(t.obj_rhs.is_zero(), "the trivial row keeps phase one feasible");
    for r in 0..height {
        if t.basis[r] >= m {
            if let Some(c) = (0..m).find(|&c| !t.a[r][c].is_zero()) {
                t.pivot(r, c)?;
            }
        }
    }

    // phase two: minimize b · y
    let costs: Vec<T> = rows.iter().map(|(_, b)| b.clone()).collect();
    t.set_costs(&costs)?;
    t.optimize()?;

    // multipliers: reduced cost of artificial j is -pi_j
    let pi: Vec<BigRational> = (0..height).map(|j| t.obj[m + j].neg().to_big()).collect();
    if Signed::is_negative(&pi[d]) {
        let mut y = vec![BigRational::zero(); m];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < m {
                y[b] = t.rhs[r].to_big();
            }
        }
        assert!(is_farkas_certificate(d, rows, &y), "solver claimed infeasibility without a certificate");
        Some(Feasibility::Infeasible)
    } else {
        Some(Feasibility::Feasible(pi[..d].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn interval() {
        let mut s = LinearSystem::new(1);
        s.push(LinearConstraint::from_ints(&[1], Relation::Ge, 1));
        s.push(LinearConstraint::from_ints(&[1], Relation::Le, 2));
        match linear_feasibility(&s) {
            Feasibility::Feasible(x) => {
                assert!(x[0] >= BigRational::one() && x[0] <= BigRational::from_integer(2.into()))
            }
            Feasibility::Infeasible => panic!("feasible interval"),
        }
    }

    #[test]
    fn empty_interval() {
        let mut s = LinearSystem::new(1);
        s.push(LinearConstraint::from_ints(&[1], Relation::Ge, 1));
        s.push(LinearConstraint::from_ints(&[1], Relation::Le, 0));
        assert_eq!(linear_feasibility(&s), Feasibility::Infeasible);
    }

    #[test]
    fn no_constraints() {
        let s = LinearSystem::new(3);
        assert_eq!(linear_feasibility(&s), Feasibility::Feasible(ints(&[0, 0, 0])));
    }

    #[test]
    fn equalities_and_fractions() {
        // 3x = 1, x + y = 1
        let mut s = LinearSystem::new(2);
        s.push(LinearConstraint::from_ints(&[3, 0], Relation::Eq, 1));
        s.push(LinearConstraint::from_ints(&[1, 1], Relation::Eq, 1));
        let Feasibility::Feasible(x) = linear_feasibility(&s) else {
            panic!("feasible")
        };
        assert_eq!(x[0], BigRational::new(1.into(), 3.into()));
        assert_eq!(x[1], BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn dictator_threshold_system() {
        // variables p1 p2 p3 q; winners {3}; maximal loser {2,1}
        let mut s = LinearSystem::new(4);
        for a in 0..3 {
            let mut c = vec![0; 4];
            c[a] = 1;
            s.push(LinearConstraint::from_ints(&c, Relation::Ge, 0));
        }
        s.push(LinearConstraint::from_ints(&[0, 0, 1, -1], Relation::Ge, 0));
        s.push(LinearConstraint::from_ints(&[1, 1, 0, -1], Relation::Le, -1));
        let Feasibility::Feasible(x) = linear_feasibility(&s) else {
            panic!("dictator is weighted")
        };
        assert!(x[2] >= x[3]);
        assert!(&x[0] + &x[1] <= &x[3] - BigRational::one());
    }

    #[test]
    fn huge_coefficients_fall_back_to_big_rationals() {
        let big = BigRational::from_integer(BigInt::from(1u8) << 200);
        let mut s = LinearSystem::new(1);
        s.push(LinearConstraint::new(vec![big.clone()], Relation::Ge, big.clone() * &big));
        s.push(LinearConstraint::new(vec![BigRational::one()], Relation::Le, big.clone()));
        let Feasibility::Feasible(x) = linear_feasibility(&s) else {
            panic!("x = 2^200 works")
        };
        assert_eq!(x[0], big);
    }

    #[test]
    fn i128_overflow_restarts_exactly() {
        // chained scalings produce intermediate values beyond i128
        let n = 6;
        let mut s = LinearSystem::new(n);
        let k = BigRational::from_integer(BigInt::from(10i64.pow(12)));
        for i in 0..n - 1 {
            let mut c = vec![BigRational::zero(); n];
            c[i + 1] = BigRational::one();
            c[i] = -k.clone();
            s.push(LinearConstraint::new(c, Relation::Ge, BigRational::zero()));
        }
        let mut c = vec![BigRational::zero(); n];
        c[0] = BigRational::one();
        s.push(LinearConstraint::new(c, Relation::Ge, BigRational::one()));
        assert!(matches!(linear_feasibility(&s), Feasibility::Feasible(_)));
    }
}
