//! Fixed-size complex matrices for one and two qubits.
//!
//! Everything in the crate works with 2×2 single-qubit operators and 4×4
//! two-qubit operators, so the matrices are plain stack arrays behind a const
//! generic. The only spectral routine is a cyclic Jacobi eigensolver for
//! Hermitian input, which is all that entropy and concurrence need.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Off-diagonal Frobenius norm at which Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-13;
/// Maximum number of cyclic Jacobi sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Hermiticity tolerance for spectral routines.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as round-off and clamped to zero.
pub const PSD_CLAMP: f64 = 1e-10;
/// Eigenvalues at or below this (relative to `max(1, λ_max)`) are treated as an
/// exact zero by [`matrix_sqrt_psd`], so that the square root does not turn
/// ~1e-17 round-off into ~1e-9 spurious entries.
pub const RANK_TOL: f64 = 1e-14;

/// Tolerances for [`DensityMatrix`] validation.
pub const STATE_HERMITIAN_TOL: f64 = 1e-12;
pub const STATE_TRACE_TOL: f64 = 1e-12;
pub const STATE_EIG_TOL: f64 = 1e-10;

pub(crate) const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Square complex matrix of fixed dimension `N`, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct CMat<const N: usize>(pub [[C64; N]; N]);

pub type CMat2 = CMat<2>;
pub type CMat4 = CMat<4>;

impl<const N: usize> CMat<N> {
    pub fn zeros() -> Self {
        CMat([[c(0.0, 0.0); N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = c(1.0, 0.0);
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = c(rows[i][j], 0.0);
            }
        }
        m
    }

    pub fn diag(d: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = c(d[i], 0.0);
        }
        m
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[C64; N], v: &[C64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = u[i] * v[j].conj();
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate (not the adjoint).
    pub fn conj(&self) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z = z.conj();
            }
        }
        m
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z *= s;
            }
        }
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(c(s, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// `self · rho · self†`
    pub fn sandwich(&self, rho: &Self) -> Self {
        *self * *rho * self.adjoint()
    }

    /// Largest entrywise deviation from Hermiticity, `max |m_ij − conj(m_ji)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in i..N {
                worst = worst.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..N {
            for j in 0..N {
                if i != j {
                    acc += self.0[i][j].norm_sqr();
                }
            }
        }
        acc.sqrt()
    }

    /// `(m + m†)/2`
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale_re(0.5)
    }
}

impl<const N: usize> Default for CMat<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> fmt::Debug for CMat<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMat<{N}>[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<const N: usize> Index<(usize, usize)> for CMat<N> {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMat<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for CMat<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for CMat<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] -= rhs.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Mul for CMat<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == c(0.0, 0.0) {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> std::iter::Sum for CMat<N> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zeros(), |acc, m| acc + m)
    }
}

/// Pauli matrices and other fixed single-qubit operators.
pub mod pauli {
    use super::{c, CMat2};

    pub fn sigma_x() -> CMat2 {
        CMat2::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    pub fn sigma_y() -> CMat2 {
        let mut m = CMat2::zeros();
        m.0[0][1] = c(0.0, -1.0);
        m.0[1][0] = c(0.0, 1.0);
        m
    }

    pub fn sigma_z() -> CMat2 {
        CMat2::diag([1.0, -1.0])
    }

    /// `(σ₁ + iσ₂)/2 = |0⟩⟨1|`
    pub fn lowering() -> CMat2 {
        CMat2::from_real([[0.0, 1.0], [0.0, 0.0]])
    }

    /// `(σ₁ − iσ₂)/2 = |1⟩⟨0|`
    pub fn raising() -> CMat2 {
        CMat2::from_real([[0.0, 0.0], [1.0, 0.0]])
    }
}

/// Kronecker product with row-major block layout:
/// `out[(2i+k),(2j+l)] = a[i,j]·b[k,l]`.
pub fn kron(a: &CMat2, b: &CMat2) -> CMat4 {
    let mut out = CMat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    out
}

/// Eigen-decomposition of a Hermitian matrix. Values are sorted in
/// descending order; `vectors` holds the matching eigenvectors as columns.
#[derive(Debug, Clone, Copy)]
pub struct Eigensystem<const N: usize> {
    pub values: [f64; N],
    pub vectors: CMat<N>,
}

impl<const N: usize> Eigensystem<N> {
    pub fn vector(&self, k: usize) -> [C64; N] {
        let mut v = [c(0.0, 0.0); N];
        for (i, vi) in v.iter_mut().enumerate() {
            *vi = self.vectors.0[i][k];
        }
        v
    }

    /// `Σ f(λ_i) v_i v_i†`
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMat<N> {
        (0..N)
            .map(|k| {
                let v = self.vector(k);
                CMat::outer(&v, &v).scale_re(f(self.values[k]))
            })
            .sum()
    }
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eigensystem<const N: usize>(m: &CMat<N>) -> Result<Eigensystem<N>> {
    let defect = m.hermitian_defect();
    if !(defect <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian(defect));
    }
    let mut a = m.hermitian_part();
    for i in 0..N {
        a.0[i][i].im = 0.0;
    }
    let mut v = CMat::<N>::identity();

    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off < JACOBI_TOL {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a.0[j][j].re.total_cmp(&a.0[i][i].re));
    let values = order.map(|k| a.0[k][k].re);
    let mut vectors = CMat::<N>::zeros();
    for (col, &k) in order.iter().enumerate() {
        for row in 0..N {
            vectors.0[row][col] = v.0[row][k];
        }
    }
    Ok(Eigensystem { values, vectors })
}

// One Jacobi rotation zeroing a[p][q]. The unitary is J = U·R where
// U = diag(1, conj(e)) on (p, q) makes a[p][q] real and R is the classic
// real symmetric rotation; applied as a ← J†·a·J and v ← v·J.
fn rotate<const N: usize>(a: &mut CMat<N>, v: &mut CMat<N>, p: usize, q: usize) {
    let apq = a.0[p][q];
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let e = apq / r;
    let theta = (a.0[q][q].re - a.0[p][p].re) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let cs = 1.0 / (t * t + 1.0).sqrt();
    let sn = t * cs;

    let jpp = c(cs, 0.0);
    let jpq = c(sn, 0.0);
    let jqp = e.conj() * (-sn);
    let jqq = e.conj() * cs;

    for k in 0..N {
        let akp = a.0[k][p];
        let akq = a.0[k][q];
        a.0[k][p] = akp * jpp + akq * jqp;
        a.0[k][q] = akp * jpq + akq * jqq;
    }
    for k in 0..N {
        let apk = a.0[p][k];
        let aqk = a.0[q][k];
        a.0[p][k] = jpp.conj() * apk + jqp.conj() * aqk;
        a.0[q][k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a.0[p][q] = c(0.0, 0.0);
    a.0[q][p] = c(0.0, 0.0);
    a.0[p][p].im = 0.0;
    a.0[q][q].im = 0.0;

    for k in 0..N {
        let vkp = v.0[k][p];
        let vkq = v.0[k][q];
        v.0[k][p] = vkp * jpp + vkq * jqp;
        v.0[k][q] = vkp * jpq + vkq * jqq;
    }
}

/// Clamp a spectrum for PSD use: values in `[-PSD_CLAMP, 0)` become zero,
/// anything more negative is an error.
pub(crate) fn clamp_psd(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -PSD_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::NotPositive(value))
    }
}

/// Principal square root of a Hermitian positive-semidefinite matrix.
pub fn matrix_sqrt_psd<const N: usize>(m: &CMat<N>) -> Result<CMat<N>> {
    let eig = hermitian_eigensystem(m)?;
    let cutoff = RANK_TOL * eig.values[0].max(1.0);
    let mut roots = [0.0; N];
    for (r, &lambda) in roots.iter_mut().zip(eig.values.iter()) {
        let clamped = clamp_psd(lambda)?;
        *r = if clamped <= cutoff { 0.0 } else { clamped.sqrt() };
    }
    let mut out = CMat::<N>::zeros();
    for k in 0..N {
        if roots[k] == 0.0 {
            continue;
        }
        let v = eig.vector(k);
        out = out + CMat::outer(&v, &v).scale_re(roots[k]);
    }
    Ok(out)
}

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(CMat4);

impl DensityMatrix {
    pub fn new(mat: CMat4) -> Result<Self> {
        let defect = mat.hermitian_defect();
        if !(defect <= STATE_HERMITIAN_TOL) {
            return Err(Error::InvalidState(format!("Hermiticity defect {defect:e}")));
        }
        let tr = mat.trace();
        if !((tr.re - 1.0).abs() <= STATE_TRACE_TOL && tr.im.abs() <= STATE_TRACE_TOL) {
            return Err(Error::InvalidState(format!("trace {tr}")));
        }
        let eig = hermitian_eigensystem(&mat)
            .map_err(|e| Error::InvalidState(format!("spectrum: {e}")))?;
        let min = eig.values[3];
        if min < -STATE_EIG_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(DensityMatrix(mat))
    }

    /// Projector onto a (not necessarily normalized) pure state.
    pub fn from_pure(psi: [C64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if norm <= 0.0 {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        Self::new(CMat4::outer(&psi, &psi).scale_re(1.0 / norm))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(CMat4::identity().scale_re(0.25))
    }

    pub fn mat(&self) -> &CMat4 {
        &self.0
    }

    /// Zero-based entry access; `get(0, 3)` is the ρ₁₄ coherence.
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.0 .0[i][j]
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        // validated at construction, so the solver cannot fail here
        hermitian_eigensystem(&self.0)
            .expect("validated density matrix")
            .values
    }
}

impl From<DensityMatrix> for CMat4 {
    fn from(rho: DensityMatrix) -> Self {
        rho.0
    }
}

#[cfg(test)]
mod tests {
    use super::pauli::*;
    use super::*;
    use approx::assert_abs_diff_eq;

    fn werner_mat(alpha: f64) -> CMat4 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)];
        CMat4::identity().scale_re((1.0 - alpha) / 4.0) + CMat4::outer(&psi, &psi).scale_re(alpha)
    }

    #[test]
    fn kron_identity() {
        assert_eq!(kron(&CMat2::identity(), &CMat2::identity()), CMat4::identity());
    }

    #[test]
    fn kron_sigma_y_is_spin_flip() {
        let yy = kron(&sigma_y(), &sigma_y());
        let mut expected = CMat4::zeros();
        expected.0[0][3] = c(-1.0, 0.0);
        expected.0[1][2] = c(1.0, 0.0);
        expected.0[2][1] = c(1.0, 0.0);
        expected.0[3][0] = c(-1.0, 0.0);
        assert_eq!(yy, expected);
    }

    #[test]
    fn kron_projectors() {
        let p0 = CMat2::diag([1.0, 0.0]);
        assert_eq!(kron(&p0, &p0), CMat4::diag([1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn eigen_diagonal() {
        let eig = hermitian_eigensystem(&CMat4::diag([0.1, 0.4, 0.2, 0.3])).unwrap();
        assert_eq!(eig.values, [0.4, 0.3, 0.2, 0.1]);
    }

    #[test]
    fn eigen_identity() {
        let eig = hermitian_eigensystem(&CMat4::identity()).unwrap();
        assert_eq!(eig.values, [1.0; 4]);
        let gram = eig.vectors.adjoint() * eig.vectors;
        assert!(gram.max_abs_diff(&CMat4::identity()) < 1e-14);
    }

    #[test]
    fn eigen_werner() {
        let m = werner_mat(0.2);
        let eig = hermitian_eigensystem(&m).unwrap();
        let expected = [0.4, 0.2, 0.2, 0.2]; // (1+3α)/4 and triple (1−α)/4
        for (got, want) in eig.values.iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        for k in 0..4 {
            let v = eig.vector(k);
            let mv = m * CMat4::outer(&v, &v);
            let lv = CMat4::outer(&v, &v).scale_re(eig.values[k]);
            assert!(mv.max_abs_diff(&lv) < 1e-10);
        }
    }

    #[test]
    fn eigen_complex_hermitian() {
        let mut m = CMat4::diag([0.5, -0.2, 1.3, 0.1]);
        m.0[0][1] = c(0.3, -0.7);
        m.0[1][0] = c(0.3, 0.7);
        m.0[2][3] = c(-0.1, 0.4);
        m.0[3][2] = c(-0.1, -0.4);
        m.0[0][3] = c(0.0, 0.25);
        m.0[3][0] = c(0.0, -0.25);
        let eig = hermitian_eigensystem(&m).unwrap();
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
        assert!(eig.reconstruct_with(|x| x).max_abs_diff(&m) < 1e-12);
        assert_abs_diff_eq!(eig.values.iter().sum::<f64>(), m.trace().re, epsilon = 1e-12);
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let mut m = CMat4::identity();
        m.0[0][1] = c(1.0, 0.0);
        assert!(matches!(hermitian_eigensystem(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn sqrt_diagonal() {
        let r = matrix_sqrt_psd(&CMat4::diag([4.0, 1.0, 0.0, 0.25])).unwrap();
        assert!(r.max_abs_diff(&CMat4::diag([2.0, 1.0, 0.0, 0.5])) < 1e-15);
        let id = matrix_sqrt_psd(&CMat4::identity()).unwrap();
        assert!(id.max_abs_diff(&CMat4::identity()) < 1e-15);
    }

    #[test]
    fn sqrt_round_trip_werner() {
        let w = werner_mat(0.2);
        let r = matrix_sqrt_psd(&(w * w)).unwrap();
        assert!(r.max_abs_diff(&w) < 1e-9);
        assert!((r * r).max_abs_diff(&(w * w)) < 1e-9);
    }

    #[test]
    fn sqrt_clamps_round_off_and_rejects_negative() {
        let r = matrix_sqrt_psd(&CMat4::diag([1.0, -1e-12, 0.0, 0.0])).unwrap();
        assert_eq!(r.0[1][1], c(0.0, 0.0));
        assert!(matches!(
            matrix_sqrt_psd(&CMat4::diag([1.0, -1e-6, 0.0, 0.0])),
            Err(Error::NotPositive(_))
        ));
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(werner_mat(0.7)).is_ok());
        assert!(DensityMatrix::new(CMat4::identity()).is_err());
        assert!(DensityMatrix::new(CMat4::diag([1.2, -0.2, 0.0, 0.0])).is_err());
        let mut asym = CMat4::diag([0.25; 4]);
        asym.0[0][1] = c(0.1, 0.0);
        assert!(DensityMatrix::new(asym).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn cmat4() -> impl Strategy<Value = CMat4> {
            proptest::array::uniform32(-1.0f64..1.0).prop_map(|xs| {
                let mut m = CMat4::zeros();
                for i in 0..4 {
                    for j in 0..4 {
                        m.0[i][j] = c(xs[2 * (4 * i + j)], xs[2 * (4 * i + j) + 1]);
                    }
                }
                m
            })
        }

        fn cmat2() -> impl Strategy<Value = CMat2> {
            proptest::array::uniform8(-1.0f64..1.0).prop_map(|xs| {
                CMat([[c(xs[0], xs[1]), c(xs[2], xs[3])], [c(xs[4], xs[5]), c(xs[6], xs[7])]])
            })
        }

        proptest! {
            #[test]
            fn eigensystem_reconstructs(m in cmat4()) {
                let h = m.hermitian_part();
                let eig = hermitian_eigensystem(&h).unwrap();
                prop_assert!(eig.reconstruct_with(|x| x).max_abs_diff(&h) < 1e-9);
                let rotated = eig.vectors.adjoint() * h * eig.vectors;
                prop_assert!((rotated.trace() - h.trace()).norm() < 1e-10);
                for k in 0..4 {
                    let v = eig.vector(k);
                    let mv: [C64; 4] = std::array::from_fn(|i| (0..4).map(|j| h.0[i][j] * v[j]).sum());
                    for i in 0..4 {
                        prop_assert!((mv[i] - v[i] * eig.values[k]).norm() < 1e-10);
                    }
                }
            }

            #[test]
            fn kron_is_bilinear(a in cmat2(), b in cmat2(), d in cmat2()) {
                // (a+b)·d and a·d + b·d differ only by rounding
                prop_assert!(kron(&(a + b), &d).max_abs_diff(&(kron(&a, &d) + kron(&b, &d))) < 1e-15);
            }
        }
    }
}
