//! The Beauville lattice of S^[n], the Beauville-Debarre involution on S^[2]
//! and the fourfold intersection-number calculus on S^[2].
//!
//! Pic(S^[n]) = Pic(S) ⊥ Ze with (e, e) = -2(n-1); 2e is the class of the
//! nonreduced subschemes. Whether e itself is algebraic on a given S^[2] is
//! not decidable from lattice data and is not asserted anywhere here.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{IntegralLattice, LatticeVector};

/// Pic(S) extended orthogonally by Ze with (e, e) = -2(n-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeauvilleLattice {
    n: u32,
    base: IntegralLattice,
    extended: IntegralLattice,
}

impl BeauvilleLattice {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn base(&self) -> &IntegralLattice {
        &self.base
    }

    pub fn extended(&self) -> &IntegralLattice {
        &self.extended
    }

    /// The class e, as a vector of the extended lattice.
    pub fn e(&self) -> HilbertClass {
        HilbertClass {
            surface_part: LatticeVector::zero(self.base.rank()),
            e_coeff: BigInt::from(1),
        }
    }

    pub fn pair(&self, x: &HilbertClass, y: &HilbertClass) -> Result<BigInt> {
        self.extended.pair(&x.embed(), &y.embed())
    }

    pub fn square(&self, x: &HilbertClass) -> Result<BigInt> {
        self.pair(x, x)
    }
}

/// A divisor class on S^[n], split as a surface part plus a multiple of e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertClass {
    pub surface_part: LatticeVector,
    pub e_coeff: BigInt,
}

impl HilbertClass {
    pub fn new(surface_part: LatticeVector, e_coeff: impl Into<BigInt>) -> Self {
        HilbertClass {
            surface_part,
            e_coeff: e_coeff.into(),
        }
    }

    /// A pure surface class (e coefficient 0).
    pub fn surface(surface_part: LatticeVector) -> Self {
        HilbertClass {
            surface_part,
            e_coeff: BigInt::zero(),
        }
    }

    /// Coordinates in the extended lattice (surface part, then e).
    pub fn embed(&self) -> LatticeVector {
        self.surface_part.extended(self.e_coeff.clone())
    }

    pub fn from_extended(v: &LatticeVector) -> Self {
        let mut coords = v.coords().to_vec();
        let e_coeff = coords.pop().expect("extended vector has rank >= 1");
        HilbertClass {
            surface_part: LatticeVector::new(coords),
            e_coeff,
        }
    }

    fn scaled(&self, c: &BigInt) -> Self {
        HilbertClass {
            surface_part: self.surface_part.scaled(c),
            e_coeff: &self.e_coeff * c,
        }
    }

    fn sub(&self, rhs: &HilbertClass) -> Self {
        HilbertClass {
            surface_part: &self.surface_part - &rhs.surface_part,
            e_coeff: &self.e_coeff - &rhs.e_coeff,
        }
    }
}

/// Orthogonal extension Pic(S) ⊥ Ze with (e, e) = -2(n-1). Rejects n < 2:
/// n = 1 is S itself and silently accepting it would drift the convention.
pub fn beauville_extend(surface: &IntegralLattice, n: u32) -> Result<BeauvilleLattice> {
    if n < 2 {
        return Err(Error::BadExtensionOrder(n));
    }
    let e_square = -2 * (i64::from(n) - 1);
    let e_line = IntegralLattice::from_rows(&[&[e_square]])
        .with_labels(vec!["e".to_string()])
        .unwrap();
    let extended = surface.orthogonal_sum(&e_line);
    Ok(BeauvilleLattice {
        n,
        base: surface.clone(),
        extended,
    })
}

/// Action of the Beauville-Debarre involution on Pic(S^[2]):
/// x -> -x + (f4 - e, x)(f4 - e). Defined only when the reflecting vector
/// f4 - e has square 2 in the Beauville form (quartic convention).
pub fn debarre_involution(
    beauville: &BeauvilleLattice,
    f4: &LatticeVector,
    x: &HilbertClass,
) -> Result<HilbertClass> {
    if beauville.n() != 2 {
        return Err(Error::UnsupportedOrder(beauville.n()));
    }
    let reflector = HilbertClass::new(f4.clone(), BigInt::from(-1));
    let r_square = beauville.square(&reflector)?;
    if r_square != BigInt::from(2) {
        return Err(Error::ReflectorSquare(r_square));
    }
    let coeff = beauville.pair(&reflector, x)?;
    Ok(reflector.scaled(&coeff).sub(x))
}

/// Top intersection number a.b.c.d on S^[2] via the symmetrized Beauville
/// pairing with Fujiki constant 1:
/// (a,b)(c,d) + (a,c)(b,d) + (a,d)(b,c).
/// Restricted to n = 2; no Fujiki constant is asserted for n > 2.
pub fn quadruple_intersection(
    beauville: &BeauvilleLattice,
    a: &HilbertClass,
    b: &HilbertClass,
    c: &HilbertClass,
    d: &HilbertClass,
) -> Result<BigInt> {
    if beauville.n() != 2 {
        return Err(Error::UnsupportedOrder(beauville.n()));
    }
    let ab = beauville.pair(a, b)?;
    let cd = beauville.pair(c, d)?;
    let ac = beauville.pair(a, c)?;
    let bd = beauville.pair(b, d)?;
    let ad = beauville.pair(a, d)?;
    let bc = beauville.pair(b, c)?;
    Ok(ab * cd + ac * bd + ad * bc)
}

/// (f - me).(f - me).Sigma = <f, f> - m^2, where Sigma is the surface of
/// subschemes through a fixed point. Sigma has no class in the Beauville
/// lattice; only this closed form is exposed.
pub fn sigma_pairing(beauville: &BeauvilleLattice, f: &LatticeVector, m: &BigInt) -> Result<BigInt> {
    if beauville.n() != 2 {
        return Err(Error::UnsupportedOrder(beauville.n()));
    }
    Ok(beauville.base().square(f)? - m * m)
}

/// (f - me).(f - me).(g*g) with g*g = g.g - <g,g> Sigma. Evaluates both the
/// decomposition and the closed form 2<f,g>^2 - m^2 <g,g>; they agree
/// identically, which is asserted.
pub fn star_square_pairing(
    beauville: &BeauvilleLattice,
    f: &LatticeVector,
    m: &BigInt,
    g: &LatticeVector,
) -> Result<BigInt> {
    if beauville.n() != 2 {
        return Err(Error::UnsupportedOrder(beauville.n()));
    }
    let fme = HilbertClass::new(f.clone(), -m.clone());
    let g0 = HilbertClass::surface(g.clone());
    let gg = beauville.base().square(g)?;
    let decomposition =
        quadruple_intersection(beauville, &fme, &fme, &g0, &g0)? - &gg * sigma_pairing(beauville, f, m)?;
    let fg = beauville.base().pair(f, g)?;
    let closed = 2 * &fg * &fg - m * m * &gg;
    assert_eq!(decomposition, closed, "star-square evaluation paths diverged");
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    fn quartic_octic(k: i64) -> IntegralLattice {
        IntegralLattice::from_rows(&[&[4, k], &[k, 8]])
            .with_labels(vec!["f4".into(), "f8".into()])
            .unwrap()
    }

    #[test]
    fn extend_quartic_octic() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        assert_eq!(
            b.extended().gram(),
            IntegralLattice::from_rows(&[&[4, 9, 0], &[9, 8, 0], &[0, 0, -2]]).gram()
        );
        assert_eq!(b.extended().labels().unwrap()[2], "e");
    }

    #[test]
    fn extend_n3() {
        let b = beauville_extend(&IntegralLattice::from_rows(&[&[2]]), 3).unwrap();
        assert_eq!(
            b.extended().gram(),
            IntegralLattice::from_rows(&[&[2, 0], &[0, -4]]).gram()
        );
    }

    #[test]
    fn extend_discriminant() {
        let b = beauville_extend(&IntegralLattice::from_rows(&[&[2]]), 2).unwrap();
        assert_eq!(b.extended().discriminant(), BigInt::from(-4));
    }

    #[test]
    fn extend_rejects_n1() {
        assert!(matches!(
            beauville_extend(&IntegralLattice::from_rows(&[&[2]]), 1),
            Err(Error::BadExtensionOrder(1))
        ));
    }

    #[test]
    fn involution_fixes_reflector() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        let f4 = v(&[1, 0]);
        let reflector = HilbertClass::new(f4.clone(), -1);
        let image = debarre_involution(&b, &f4, &reflector).unwrap();
        assert_eq!(image, reflector);
    }

    #[test]
    fn involution_pushforward_identity() {
        // j*(f8 - 2e) = (k-4) f4 - f8 - (k-6) e
        for k in 8..=40 {
            let b = beauville_extend(&quartic_octic(k), 2).unwrap();
            let x = HilbertClass::new(v(&[0, 1]), -2);
            let image = debarre_involution(&b, &v(&[1, 0]), &x).unwrap();
            let expected = HilbertClass::new(v(&[k - 4, -1]), -(k - 6));
            assert_eq!(image, expected, "k = {k}");
        }
    }

    #[test]
    fn involution_of_e() {
        // (f4 - e, e) = -(e,e) = 2, so j*(e) = -e + 2(f4 - e) = 2 f4 - 3e
        let b = beauville_extend(&quartic_octic(8), 2).unwrap();
        let image = debarre_involution(&b, &v(&[1, 0]), &b.e()).unwrap();
        assert_eq!(image, HilbertClass::new(v(&[2, 0]), -3));
    }

    #[test]
    fn involution_rejects_bad_reflector() {
        // f8 - e has square 8 - 2 = 6, not 2
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        assert!(matches!(
            debarre_involution(&b, &v(&[0, 1]), &b.e()),
            Err(Error::ReflectorSquare(_))
        ));
    }

    #[test]
    fn quadruple_ffgg_closed_form() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        let f = HilbertClass::surface(v(&[1, 0]));
        let g = HilbertClass::surface(v(&[2, -1]));
        let ff = b.square(&f).unwrap();
        let gg = b.square(&g).unwrap();
        let fg = b.pair(&f, &g).unwrap();
        let quad = quadruple_intersection(&b, &f, &f, &g, &g).unwrap();
        assert_eq!(quad, &ff * &gg + 2 * &fg * &fg);
    }

    #[test]
    fn quadruple_fegg_vanishes() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        let f = HilbertClass::surface(v(&[1, 0]));
        let g = HilbertClass::surface(v(&[2, -1]));
        let e = b.e();
        assert_eq!(
            quadruple_intersection(&b, &f, &e, &g, &g).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn quadruple_eegg() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        let g = HilbertClass::surface(v(&[2, -1]));
        let e = b.e();
        let gg = b.square(&g).unwrap();
        assert_eq!(
            quadruple_intersection(&b, &e, &e, &g, &g).unwrap(),
            -2 * gg
        );
    }

    #[test]
    fn quadruple_eeee() {
        let b = beauville_extend(&quartic_octic(9), 2).unwrap();
        let e = b.e();
        assert_eq!(
            quadruple_intersection(&b, &e, &e, &e, &e).unwrap(),
            BigInt::from(12)
        );
    }

    #[test]
    fn sigma_degree_eight() {
        let b = beauville_extend(&IntegralLattice::from_rows(&[&[8]]), 2).unwrap();
        assert_eq!(
            sigma_pairing(&b, &v(&[1]), &BigInt::from(2)).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            sigma_pairing(&b, &v(&[1]), &BigInt::zero()).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn sigma_twice_square_degree() {
        // <f,f> = 2m^2 gives m^2
        for m in 1i64..=10 {
            let b =
                beauville_extend(&IntegralLattice::from_rows(&[&[2 * m * m]]), 2).unwrap();
            assert_eq!(
                sigma_pairing(&b, &v(&[1]), &BigInt::from(m)).unwrap(),
                BigInt::from(m * m)
            );
        }
    }

    #[test]
    fn star_square_examples() {
        // <f,g> = 5, m = 2, <g,g> = 2 -> 2*25 - 4*2 = 42
        let s = IntegralLattice::from_rows(&[&[8, 5], &[5, 2]]);
        let b = beauville_extend(&s, 2).unwrap();
        assert_eq!(
            star_square_pairing(&b, &v(&[1, 0]), &BigInt::from(2), &v(&[0, 1])).unwrap(),
            BigInt::from(42)
        );
        // m = 0 -> 2<f,g>^2
        assert_eq!(
            star_square_pairing(&b, &v(&[1, 0]), &BigInt::zero(), &v(&[0, 1])).unwrap(),
            BigInt::from(50)
        );
    }

    #[test]
    fn star_square_isotropic_g() {
        let s = IntegralLattice::from_rows(&[&[8, 3], &[3, 0]]);
        let b = beauville_extend(&s, 2).unwrap();
        assert_eq!(
            star_square_pairing(&b, &v(&[1, 0]), &BigInt::from(2), &v(&[0, 1])).unwrap(),
            BigInt::from(18)
        );
    }

    #[test]
    fn norm_identity_g() {
        // g = (k-4) f4 - f8 has <g,g> = 2(k-6)^2
        for k in 8i64..=40 {
            let l = quartic_octic(k);
            let g = v(&[k - 4, -1]);
            assert_eq!(l.square(&g).unwrap(), BigInt::from(2 * (k - 6) * (k - 6)));
        }
    }
}
