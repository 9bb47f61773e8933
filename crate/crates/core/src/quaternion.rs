//! Quaternions over ℚ, their action matrices on ℝ⁴, and ℍ ≅ ℂ².
//!
//! ℝ⁴ carries the basis `(1, i, j, k)`, so a quaternion `a + bi + cj + dk`
//! is the column `(a, b, c, d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{GaussianRational, Matrix};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(q(a), q(b), q(c), q(d))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn components(&self) -> [BigRational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn from_components(v: [BigRational; 4]) -> Self {
        let [a, b, c, d] = v;
        Self { a, b, c, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

/// Hamilton product.
pub fn qmul(p: &Quaternion, r: &Quaternion) -> Quaternion {
    let (a1, b1, c1, d1) = (&p.a, &p.b, &p.c, &p.d);
    let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
    Quaternion {
        a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        qmul(self, rhs)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        qmul(&self, &rhs)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &r.a, &self.b + &r.b, &self.c + &r.c, &self.d + &r.d)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, r: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &r.a, &self.b - &r.b, &self.c - &r.c, &self.d - &r.d)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

fn basis4() -> [Quaternion; 4] {
    [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()]
}

fn matrix_of(f: impl Fn(&Quaternion) -> Quaternion) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for (col, e) in basis4().iter().enumerate() {
        for (row, x) in f(e).components().into_iter().enumerate() {
            m[(row, col)] = GaussianRational::from(x);
        }
    }
    m
}

/// Matrix of `v ↦ q·v` on ℝ⁴.
pub fn left_action_matrix(q: &Quaternion) -> Matrix {
    matrix_of(|v| qmul(q, v))
}

/// Matrix of `v ↦ v·q` on ℝ⁴.
pub fn right_action_matrix(q: &Quaternion) -> Matrix {
    matrix_of(|v| qmul(v, q))
}

/// The displayed `I₊, J₊, K₊`, written out entry by entry.
pub fn plus_family() -> [Matrix; 3] {
    [
        Matrix::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
        Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]),
        Matrix::from_ints(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// The displayed `I₋, J₋, K₋`; right multiplication by `a+bi+cj+dk` is
/// `a·id − bI₋ − cJ₋ − dK₋`.
pub fn minus_family() -> [Matrix; 3] {
    [
        Matrix::from_ints(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
        Matrix::from_ints(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]),
        Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]),
    ]
}

/// A quaternion as a pair of complex numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct C2Vector {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
}

impl C2Vector {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> Self {
        Self { alpha, beta }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(c * &self.alpha, c * &self.beta)
    }

    pub fn to_vec(&self) -> Vec<GaussianRational> {
        vec![self.alpha.clone(), self.beta.clone()]
    }
}

/// Left ℂ-module coordinates: `h = α + β·j` with `α, β ∈ ℂ = ⟨1, i⟩`.
///
/// Left multiplication by `i` becomes scalar multiplication and left
/// multiplication by `j` becomes [`j0_map`].
pub fn to_c2_left(h: &Quaternion) -> C2Vector {
    C2Vector::new(
        GaussianRational::new(h.a.clone(), h.b.clone()),
        GaussianRational::new(h.c.clone(), h.d.clone()),
    )
}

pub fn from_c2_left(v: &C2Vector) -> Quaternion {
    Quaternion::new(
        v.alpha.re().clone(),
        v.alpha.im().clone(),
        v.beta.re().clone(),
        v.beta.im().clone(),
    )
}

/// Right ℂ-module coordinates: `h = α + j·β`. Since `jβ = β̄j`, this differs
/// from [`to_c2_left`] by conjugating `β`. Right multiplication by `i` is
/// scalar multiplication and right multiplication by `j` is again [`j0_map`].
pub fn to_c2_right(h: &Quaternion) -> C2Vector {
    C2Vector::new(
        GaussianRational::new(h.a.clone(), h.b.clone()),
        GaussianRational::new(h.c.clone(), -h.d.clone()),
    )
}

pub fn from_c2_right(v: &C2Vector) -> Quaternion {
    Quaternion::new(
        v.alpha.re().clone(),
        v.alpha.im().clone(),
        v.beta.re().clone(),
        -v.beta.im().clone(),
    )
}

/// `(α, β) ↦ (−β̄, ᾱ)`.
pub fn j0_map(v: &C2Vector) -> C2Vector {
    C2Vector::new(-v.beta.conj(), v.alpha.conj())
}

/// A complex number as the quaternion `re + im·i`.
pub fn complex(c: &GaussianRational) -> Quaternion {
    Quaternion::new(c.re().clone(), c.im().clone(), BigRational::zero(), BigRational::zero())
}

/// Unit check helper: `‖q‖² = 1`.
pub fn is_unit(q: &Quaternion) -> bool {
    q.norm_sqr().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn quat() -> impl Strategy<Value = Quaternion> {
        proptest::collection::vec((-9i64..10, 1i64..5), 4)
            .prop_map(|v| Quaternion::new(r(v[0].0, v[0].1), r(v[1].0, v[1].1), r(v[2].0, v[2].1), r(v[3].0, v[3].1)))
    }

    fn c2() -> impl Strategy<Value = C2Vector> {
        (-5i64..6, -5i64..6, -5i64..6, -5i64..6).prop_map(|(a, b, c, d)| {
            C2Vector::new(GaussianRational::from_parts(a, b), GaussianRational::from_parts(c, d))
        })
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = Quaternion::from_ints(-1, 0, 0, 0);
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&(&i * &j) * &k, m1);
        assert_eq!(&i * &j, k);
        let lhs = &Quaternion::from_ints(1, 1, 0, 0) * &Quaternion::from_ints(1, 0, 1, 0);
        assert_eq!(lhs, Quaternion::from_ints(1, 1, 1, 1));
    }

    #[test]
    fn j_commutes_past_complex_as_conjugate() {
        let w = Quaternion::from_ints(3, -2, 0, 0);
        assert_eq!(&Quaternion::j() * &w, &w.conj() * &Quaternion::j());
    }

    #[test]
    fn printed_matrices() {
        let [ip, jp, kp] = plus_family();
        assert_eq!(left_action_matrix(&Quaternion::i()), ip);
        assert_eq!(left_action_matrix(&Quaternion::j()), jp);
        assert_eq!(left_action_matrix(&Quaternion::k()), kp);
        assert_eq!(left_action_matrix(&Quaternion::one()), Matrix::identity(4));
        let [im, jm, km] = minus_family();
        assert_eq!(right_action_matrix(&Quaternion::i()), im.neg());
        assert_eq!(right_action_matrix(&Quaternion::j()), jm.neg());
        assert_eq!(right_action_matrix(&Quaternion::k()), km.neg());
        assert_eq!(right_action_matrix(&Quaternion::one()), Matrix::identity(4));
    }

    #[test]
    fn matrix_families_are_quaternionic() {
        let minus_id = Matrix::identity(4).neg();
        for [i, j, k] in [plus_family(), minus_family()] {
            assert_eq!(i.mul(&i), minus_id);
            assert_eq!(j.mul(&j), minus_id);
            assert_eq!(k.mul(&k), minus_id);
            assert_eq!(i.mul(&j), k);
        }
    }

    #[test]
    fn unit_combinations_square_to_minus_one() {
        let [i, j, k] = minus_family();
        let minus_id = Matrix::identity(4).neg();
        for (b, c, d) in [((3, 5), (4, 5), (0, 1)), ((0, 1), (3, 5), (4, 5)), ((2, 3), (1, 3), (2, 3))] {
            let m = i
                .scale(&GaussianRational::ratio(b.0, b.1))
                .add(&j.scale(&GaussianRational::ratio(c.0, c.1)))
                .add(&k.scale(&GaussianRational::ratio(d.0, d.1)));
            assert_eq!(m.mul(&m), minus_id);
        }
    }

    #[test]
    fn j0_examples() {
        let one = GaussianRational::from(1);
        let zero = GaussianRational::from(0);
        assert_eq!(j0_map(&C2Vector::new(one.clone(), zero.clone())), C2Vector::new(zero.clone(), one.clone()));
        assert_eq!(j0_map(&C2Vector::new(zero.clone(), one.clone())), C2Vector::new(-one, zero));
    }

    proptest! {
        #[test]
        fn associative_and_multiplicative_norm(p in quat(), s in quat(), t in quat()) {
            prop_assert_eq!(&(&p * &s) * &t, &p * &(&s * &t));
            prop_assert_eq!((&p * &s).norm_sqr(), p.norm_sqr() * s.norm_sqr());
        }

        #[test]
        fn action_matrices(p in quat(), s in quat()) {
            let lp = left_action_matrix(&p);
            let rs = right_action_matrix(&s);
            prop_assert_eq!(left_action_matrix(&(&p * &s)), lp.mul(&left_action_matrix(&s)));
            prop_assert_eq!(right_action_matrix(&(&p * &s)), rs.mul(&right_action_matrix(&p)));
            prop_assert_eq!(lp.mul(&rs), rs.mul(&lp));
        }

        #[test]
        fn c2_roundtrips(p in quat()) {
            prop_assert_eq!(from_c2_left(&to_c2_left(&p)), p.clone());
            prop_assert_eq!(from_c2_right(&to_c2_right(&p)), p);
        }

        #[test]
        fn c2_left_intertwines(p in quat()) {
            let v = to_c2_left(&p);
            let i = GaussianRational::i();
            prop_assert_eq!(to_c2_left(&(&Quaternion::i() * &p)), v.scale(&i));
            prop_assert_eq!(to_c2_left(&(&Quaternion::j() * &p)), j0_map(&v));
        }

        #[test]
        fn c2_right_intertwines(p in quat()) {
            let v = to_c2_right(&p);
            let i = GaussianRational::i();
            prop_assert_eq!(to_c2_right(&(&p * &Quaternion::i())), v.scale(&i));
            prop_assert_eq!(to_c2_right(&(&p * &Quaternion::j())), j0_map(&v));
        }

        #[test]
        fn j0_antilinear(v in c2()) {
            let i = GaussianRational::i();
            prop_assert_eq!(j0_map(&v.scale(&i)), j0_map(&v).scale(&(-i)));
            prop_assert_eq!(j0_map(&j0_map(&v)), v.scale(&GaussianRational::from(-1)));
        }
    }
}
