//! Quasitriangular Hopf algebras and the braiding they induce on modules.

use super::{describe_failure, CrossError};
use crate::exactalg::{chain, flip, id, permute_factors, tensor_all, Field, Matrix};
use crate::hopfcore::structures::HopfAlgebraData;
use crate::report::CheckReport;

/// A Hopf algebra with a universal R-matrix `R ∈ H⊗H` (a column vector).
#[derive(Clone, Debug)]
pub struct QuasitriangularHopf<K: Field> {
    pub hopf: HopfAlgebraData<K>,
    pub r: Matrix<K>,
}

impl<K: Field> QuasitriangularHopf<K> {
    pub fn new(hopf: HopfAlgebraData<K>, r: Matrix<K>) -> Result<Self, CrossError> {
        let out = QuasitriangularHopf { hopf, r };
        let report = out.check();
        if !report.all_passed() {
            return Err(CrossError::Quasitriangular(describe_failure(&report)));
        }
        Ok(out)
    }

    /// `R = 1⊗1`, valid for cocommutative `H`.
    pub fn trivial(hopf: HopfAlgebraData<K>) -> Result<Self, CrossError> {
        let u = &hopf.bialg.alg.u;
        let r = u.tensor(u);
        QuasitriangularHopf::new(hopf, r)
    }

    /// Multiplication of `H^{⊗k}` for `k = 2, 3`.
    fn power_product(&self, k: usize) -> Matrix<K> {
        let f = self.hopf.field();
        let n = self.hopf.dim();
        let m = &self.hopf.bialg.alg.m;
        let order: Vec<usize> = (0..k).flat_map(|i| [i, i + k]).collect();
        let ms: Vec<&Matrix<K>> = vec![m; k];
        &tensor_all(&ms) * &permute_factors(f, &vec![n; 2 * k], &order)
    }

    pub fn check(&self) -> CheckReport {
        let f = self.hopf.field();
        let n = self.hopf.dim();
        let b = &self.hopf.bialg;
        let (u, delta) = (&b.alg.u, &b.coalg.delta);
        let ih = id(f, n);
        let mut r = CheckReport::new();
        if self.r.shape() != (n * n, 1) {
            r.fail("R shape", Some(format!("{}x{}", self.r.rows(), self.r.cols())));
            return r;
        }
        let m2 = self.power_product(2);
        let m3 = self.power_product(3);
        let left_r = &m2 * &self.r.tensor(&id(f, n * n));
        let inv = left_r.try_invert();
        r.record("R invertible", inv.inverse.is_some(), inv.inverse.is_none().then(|| format!("rank {}", inv.rank)));
        let r12 = self.r.tensor(u);
        let r23 = u.tensor(&self.r);
        let r13 = &permute_factors(f, &[n, n, n], &[0, 2, 1]) * &r12;
        r.equal_indexed("(Δ⊗id)R = R₁₃R₂₃", &(&delta.tensor(&ih) * &self.r), &(&m3 * &r13.tensor(&r23)));
        r.equal_indexed("(id⊗Δ)R = R₁₃R₁₂", &(&ih.tensor(delta) * &self.r), &(&m3 * &r13.tensor(&r12)));
        let lhs = &m2 * &self.r.tensor(delta);
        let rhs = &m2 * &(&flip(f, n, n) * delta).tensor(&self.r);
        r.equal("R Δ(h) = Δᶜᵒᵖ(h) R", &lhs, &rhs, |j| b.label(1, j));
        r
    }

    /// `c_{X,Y}(x⊗y) = R₂·y ⊗ R₁·x` for left modules `X`, `Y`.
    pub fn braiding(&self, ax: &Matrix<K>, ay: &Matrix<K>) -> Matrix<K> {
        let f = self.hopf.field();
        let n = self.hopf.dim();
        let (nx, ny) = (ax.rows(), ay.rows());
        chain(&[
            &flip(f, nx, ny),
            &ax.tensor(ay),
            &permute_factors(f, &[n, n, nx, ny], &[0, 2, 1, 3]),
            &self.r.tensor(&id(f, nx * ny)),
        ])
    }
}
