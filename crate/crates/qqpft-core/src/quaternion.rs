//! Hamilton quaternion arithmetic and the i/j-plane helpers used by the
//! transform kernels.
//!
//! A quaternion is written `q = r + x·i + y·j + z·k` with the usual rules
//! `i² = j² = k² = ijk = −1`, `ij = −ji = k`. Two commutative subfields
//! matter throughout this crate:
//!
//! * the **i-plane** `span{1, i}`, isomorphic to ℂ, in which the axis-1
//!   transform kernels live, and
//! * the **j-plane** `span{1, j}`, in which the axis-2 kernels live.
//!
//! Elements of either plane commute among themselves but not with general
//! quaternions; the crucial exchange rules are `z·j = j·z̄` for i-plane `z`
//! and symmetrically `w·i = i·w̄` for j-plane `w`. The [`symplectic_split`]
//! writes `q = p + s·j` with `p, s` in the i-plane, which is what lets the
//! fast transform paths run on ordinary complex FFTs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Element of the commutative subfield `span{1, i}`.
///
/// Represented directly as [`num_complex::Complex64`]; the embedding into
/// quaternions is `re + im·i` (see [`Quaternion::from_complex_i`]).
pub type ComplexI = Complex64;

/// The two imaginary units that carry transform kernels.
///
/// `I` pairs with coordinate axis 1, `J` with coordinate axis 2, matching
/// the kernel placement of the two-sided transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitAxis {
    I,
    J,
}

/// Hamilton quaternion with f64 components `r + x·i + y·j + z·k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub r: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

// ── Constructors and constants ──────────────────────────────────────────

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(r: f64, x: f64, y: f64, z: f64) -> Self {
        Self { r, x, y, z }
    }

    /// Real scalar embedded as `r + 0i + 0j + 0k`.
    #[inline]
    pub const fn from_real(r: f64) -> Self {
        Self::new(r, 0.0, 0.0, 0.0)
    }

    /// Embed an i-plane element: `re + im·i`.
    #[inline]
    pub const fn from_complex_i(c: ComplexI) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    /// Embed a j-plane element: `re + im·j`.
    #[inline]
    pub const fn from_complex_j(c: Complex64) -> Self {
        Self::new(c.re, 0.0, c.im, 0.0)
    }

    /// `cos θ + i·sin θ`, the unit circle in the i-plane.
    #[inline]
    pub fn exp_i(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s, 0.0, 0.0)
    }

    /// `cos θ + j·sin θ`, the unit circle in the j-plane.
    #[inline]
    pub fn exp_j(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, 0.0, s, 0.0)
    }
}

// ── Algebra ─────────────────────────────────────────────────────────────

impl Quaternion {
    /// Quaternion conjugate `r − x·i − y·j − z·k`.
    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.r, -self.x, -self.y, -self.z)
    }

    /// Squared Euclidean norm `r² + x² + y² + z²`.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.r * self.r + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Euclidean norm. Multiplicative: `|pq| = |p||q|`.
    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Scalar (real) part.
    #[inline]
    pub fn scalar(self) -> f64 {
        self.r
    }

    /// Multiply every component by a real factor.
    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.r * s, self.x * s, self.y * s, self.z * s)
    }

    /// Multiplicative inverse `conj(q)/|q|²`. Not defined for zero.
    #[inline]
    pub fn inverse(self) -> Self {
        self.conj().scale(1.0 / self.norm_sqr())
    }

    /// Left product with an i-plane factor: `(c.re + c.im·i)·self`.
    ///
    /// Eight multiplications instead of sixteen; the transform inner loops
    /// are built from these one-sided products.
    #[inline]
    pub fn left_mul_i(self, c: ComplexI) -> Self {
        Self::new(
            c.re * self.r - c.im * self.x,
            c.re * self.x + c.im * self.r,
            c.re * self.y - c.im * self.z,
            c.re * self.z + c.im * self.y,
        )
    }

    /// Right product with an i-plane factor: `self·(c.re + c.im·i)`.
    #[inline]
    pub fn right_mul_i(self, c: ComplexI) -> Self {
        Self::new(
            self.r * c.re - self.x * c.im,
            self.r * c.im + self.x * c.re,
            self.y * c.re + self.z * c.im,
            self.z * c.re - self.y * c.im,
        )
    }

    /// Left product with a j-plane factor: `(c.re + c.im·j)·self`.
    #[inline]
    pub fn left_mul_j(self, c: Complex64) -> Self {
        Self::new(
            c.re * self.r - c.im * self.y,
            c.re * self.x + c.im * self.z,
            c.re * self.y + c.im * self.r,
            c.re * self.z - c.im * self.x,
        )
    }

    /// Right product with a j-plane factor: `self·(c.re + c.im·j)`.
    #[inline]
    pub fn right_mul_j(self, c: Complex64) -> Self {
        Self::new(
            self.r * c.re - self.y * c.im,
            self.x * c.re - self.z * c.im,
            self.y * c.re + self.r * c.im,
            self.z * c.re + self.x * c.im,
        )
    }

    /// Right product with the unit `j`: `self·j`.
    #[inline]
    pub fn mul_j_right(self) -> Self {
        Self::new(-self.y, -self.z, self.r, self.x)
    }
}

impl std::ops::Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.r, -self.x, -self.y, -self.z)
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Self;
    /// Hamilton product (non-commutative).
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.r * o.r - self.x * o.x - self.y * o.y - self.z * o.z,
            self.r * o.x + self.x * o.r + self.y * o.z - self.z * o.y,
            self.r * o.y - self.x * o.z + self.y * o.r + self.z * o.x,
            self.r * o.z + self.x * o.y - self.y * o.x + self.z * o.r,
        )
    }
}

impl std::ops::Mul<f64> for Quaternion {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl std::ops::AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

// ── Kernel constants and the symplectic split ───────────────────────────

/// Principal square root of `b·i` or `b·j` for real `b ≠ 0`.
///
/// For `b > 0` this is `√b·exp(axis·π/4)`, for `b < 0` it is
/// `√|b|·exp(−axis·π/4)`, i.e. the principal complex square root taken in
/// the plane of the chosen unit. Squaring recovers `b·axis` exactly up to
/// rounding. This is the constant `√(b·unit)` in front of every
/// quadratic-phase kernel; both the quadrature and the FFT-based transform
/// paths share it, so branch choices can never diverge between them.
#[inline]
pub fn sqrt_unit(b: f64, axis: UnitAxis) -> Quaternion {
    let half = std::f64::consts::FRAC_PI_4 * b.signum();
    let m = b.abs().sqrt();
    let c = Complex64::new(half.cos() * m, half.sin() * m);
    match axis {
        UnitAxis::I => Quaternion::from_complex_i(c),
        UnitAxis::J => Quaternion::from_complex_j(c),
    }
}

/// Symplectic split `q = p + s·j` with `p = r + x·i` and `s = y + z·i`.
///
/// Returns `(p, s)` as i-plane elements. Exact: no arithmetic is
/// performed, components are only re-grouped — see [`symplectic_join`].
#[inline]
pub fn symplectic_split(q: Quaternion) -> (ComplexI, ComplexI) {
    (
        Complex64::new(q.r, q.x),
        Complex64::new(q.y, q.z),
    )
}

/// Inverse of [`symplectic_split`]: `p + s·j`.
#[inline]
pub fn symplectic_join(p: ComplexI, s: ComplexI) -> Quaternion {
    Quaternion::new(p.re, p.im, s.re, s.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn unit_products_follow_hamilton_table() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(Quaternion::J * Quaternion::J, -Quaternion::ONE);
        assert_eq!(Quaternion::K * Quaternion::K, -Quaternion::ONE);
    }

    #[test]
    fn one_plus_i_times_one_plus_j() {
        let p = Quaternion::ONE + Quaternion::I;
        let q = Quaternion::ONE + Quaternion::J;
        assert_eq!(p * q, Quaternion::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn q_times_conjugate_is_norm_squared() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        let qc = q * q.conj();
        assert_eq!(qc, Quaternion::from_real(30.0));
        assert_eq!(q.norm_sqr(), 30.0);
    }

    #[test]
    fn norm_of_one_i_j_k() {
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
    }

    #[test]
    fn exp_i_quarter_turns() {
        assert!(close(
            Quaternion::exp_i(std::f64::consts::FRAC_PI_2),
            Quaternion::I,
            1e-15
        ));
        let e = Quaternion::exp_i(std::f64::consts::FRAC_PI_4);
        assert!(close(e * e, Quaternion::I, 1e-15));
    }

    #[test]
    fn exp_j_conjugate_reverses_angle() {
        let t = 0.7343;
        assert!(close(
            Quaternion::exp_j(t).conj(),
            Quaternion::exp_j(-t),
            1e-16
        ));
    }

    #[test]
    fn sqrt_unit_principal_branches() {
        let s = 0.5f64.sqrt();
        assert!(close(
            sqrt_unit(1.0, UnitAxis::I),
            Quaternion::new(s, s, 0.0, 0.0),
            1e-15
        ));
        assert!(close(
            sqrt_unit(-1.0, UnitAxis::I),
            Quaternion::new(s, -s, 0.0, 0.0),
            1e-15
        ));
        let r = sqrt_unit(2.0, UnitAxis::J);
        assert!(close(r * r, Quaternion::J.scale(2.0), 1e-15));
        let r = sqrt_unit(-3.0, UnitAxis::J);
        assert!(close(r * r, Quaternion::J.scale(-3.0), 1e-14));
    }

    #[test]
    fn split_of_named_quaternion() {
        let (p, s) = symplectic_split(Quaternion::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(p, Complex64::new(1.0, 2.0));
        assert_eq!(s, Complex64::new(3.0, 4.0));
    }

    #[test]
    fn i_plane_elements_commute_with_exp_i() {
        let p = Quaternion::from_complex_i(Complex64::new(0.3, -1.2));
        let e = Quaternion::exp_i(0.9);
        assert!(close(e * p, p * e, 1e-16));
    }

    #[test]
    fn exp_i_anticommutes_past_j() {
        let t = 1.234;
        let lhs = Quaternion::exp_i(t) * Quaternion::J;
        let rhs = Quaternion::J * Quaternion::exp_i(-t);
        assert!(close(lhs, rhs, 1e-16));
    }

    #[test]
    fn one_sided_products_match_full_product() {
        let q = Quaternion::new(0.3, -1.1, 0.7, 2.2);
        let c = Complex64::new(-0.4, 0.9);
        assert!(close(q.left_mul_i(c), Quaternion::from_complex_i(c) * q, 1e-15));
        assert!(close(q.right_mul_i(c), q * Quaternion::from_complex_i(c), 1e-15));
        assert!(close(q.left_mul_j(c), Quaternion::from_complex_j(c) * q, 1e-15));
        assert!(close(q.right_mul_j(c), q * Quaternion::from_complex_j(c), 1e-15));
        assert!(close(q.mul_j_right(), q * Quaternion::J, 1e-15));
    }

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        let c = -10.0f64..10.0;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(r, x, y, z)| Quaternion::new(r, x, y, z))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in arb_quat(), q in arb_quat()) {
            let lhs = (p * q).norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn conjugation_is_an_involution_and_antihomomorphism(p in arb_quat(), q in arb_quat()) {
            prop_assert_eq!(p.conj().conj(), p);
            let lhs = (p * q).conj();
            let rhs = q.conj() * p.conj();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
        }

        #[test]
        fn multiplication_is_associative(
            p in arb_quat(), q in arb_quat(), r in arb_quat()
        ) {
            let lhs = (p * q) * r;
            let rhs = p * (q * r);
            let scale = 1.0 + lhs.norm().max(rhs.norm());
            prop_assert!((lhs - rhs).norm() / scale <= 1e-14);
        }

        #[test]
        fn scalar_part_of_triple_product_is_cyclic(
            p in arb_quat(), q in arb_quat(), r in arb_quat()
        ) {
            let a = (p * q * r).scalar();
            let b = (q * r * p).scalar();
            let c = (r * p * q).scalar();
            let scale = 1.0 + a.abs().max(b.abs()).max(c.abs());
            prop_assert!((a - b).abs() / scale <= 1e-13);
            prop_assert!((a - c).abs() / scale <= 1e-13);
        }

        #[test]
        fn split_then_join_is_identity(q in arb_quat()) {
            let (p, s) = symplectic_split(q);
            prop_assert_eq!(symplectic_join(p, s), q);
        }

        #[test]
        fn split_reconstructs_via_j_product(q in arb_quat()) {
            let (p, s) = symplectic_split(q);
            let rebuilt = Quaternion::from_complex_i(p)
                + Quaternion::from_complex_i(s) * Quaternion::J;
            prop_assert_eq!(rebuilt, q);
        }
    }
}
