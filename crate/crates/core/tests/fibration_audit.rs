//! End-to-end audits of fixed elliptic surfaces over Q(t): fiber
//! classification, Euler numbers, trivial-lattice ranks, and Shioda height
//! pairings, checked against independently known values.

use splitjac::fibration::height::SurfaceAnalysis;
use splitjac::fibration::{EllipticSurface, Kodaira, Place, SurfaceSection};
use splitjac::parse::parse_poly;
use splitjac::rat::Rat;
use splitjac::unipoly::{RatFun1, UniPoly};

fn upoly(src: &str) -> UniPoly<Rat> {
    parse_poly(src)
        .unwrap()
        .to_unipoly()
        .expect("univariate input")
}

fn rf(src: &str) -> RatFun1<Rat> {
    let f = splitjac::parse::parse_ratfun(src).unwrap();
    let num = f.num().to_unipoly().expect("univariate");
    let den = f.den().to_unipoly().expect("univariate");
    RatFun1::new(num, den)
}

fn find_type(an: &SurfaceAnalysis, pl: &str) -> Kodaira {
    for f in &an.fibers {
        if f.place.canonical_string() == pl {
            return f.kodaira;
        }
    }
    panic!("no fiber at {pl}; fibers: {:?}",
        an.fibers.iter().map(|f| (f.place.canonical_string(), f.kodaira)).collect::<Vec<_>>());
}

#[test]
fn disc36_jacobian_surface_full_audit() {
    // y^2 = x^3 + 3(t^2-4t-1)(3t^2-4t-3) x^2 + 96 t^2 (t+1)(3t+1)(t^2-6t-3) x
    //        - 256 t^3 (3t+1)^2 (7t^3-30t^2-33t-8)
    let s = EllipticSurface::new(
        upoly("3*(t^2-4*t-1)*(3*t^2-4*t-3)"),
        upoly("96*t^2*(t+1)*(3*t+1)*(t^2-6*t-3)"),
        upoly("-256*t^3*(3*t+1)^2*(7*t^3-30*t^2-33*t-8)"),
        2,
    )
    .unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    assert_eq!(an.euler, 24);
    assert_eq!(an.trivial_rank, 18);
    assert_eq!(find_type(&an, "t"), Kodaira::I(3));
    assert_eq!(find_type(&an, "t^3 - 3*t^2 - 3*t - 1"), Kodaira::I(3));
    assert_eq!(find_type(&an, "t + 1/3"), Kodaira::I(4));
    assert_eq!(find_type(&an, "inf"), Kodaira::I(4));
    assert_eq!(find_type(&an, "t^2 - 6*t - 3"), Kodaira::I(2));

    let p = SurfaceSection::new(
        rf("8*(3*t+1)*(t^2-2*t-1)"),
        rf("8*(3*t+1)^2*(t^3-3*t^2-3*t-1)"),
    );
    let q = SurfaceSection::new(
        rf("-4*t*(t-1)*(3*t+1)"),
        rf("4*t*(3*t+1)^2*(t^2-6*t-3)"),
    );
    let gram = an.gram(&[p.clone(), q.clone()]).unwrap();
    assert_eq!(gram[0][0], Rat::from_frac(3, 12));
    assert_eq!(gram[0][1], Rat::from_frac(3, 12));
    assert_eq!(gram[1][1], Rat::from_frac(7, 12));

    let (rho, disc) = an.mw_summary(&[p, q], 1).unwrap();
    assert_eq!(rho, 20);
    assert_eq!(disc, Rat::from_int(432)); // 2^4 * 3^3
}

#[test]
fn disc49_jacobian_surface_full_audit() {
    // y^2 = x^3 + (148 t^3 + 45 t^2 - 18 t + 1) x^2 + 36 t^4 (20 t^2 + 12 t - 1) x
    //        + 64 t^7 (1300 t^2 + 885 t - 72)
    let s = EllipticSurface::new(
        upoly("148*t^3+45*t^2-18*t+1"),
        upoly("36*t^4*(20*t^2+12*t-1)"),
        upoly("64*t^7*(1300*t^2+885*t-72)"),
        2,
    )
    .unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    assert_eq!(an.euler, 24);
    assert_eq!(an.trivial_rank, 18);
    assert_eq!(find_type(&an, "t"), Kodaira::I(7));
    assert_eq!(find_type(&an, "inf"), Kodaira::IStar(0));
    assert_eq!(find_type(&an, "t + 1"), Kodaira::IV);
    assert_eq!(find_type(&an, "t - 2/25"), Kodaira::I(3));
    assert_eq!(find_type(&an, "t^2 + 5/2*t - 3/16"), Kodaira::I(2));

    let p = SurfaceSection::new(
        rf("4*t^3*(4*t-3)"),
        rf("4*t^3*(t+1)*(16*t^2+40*t-3)"),
    );
    let q = SurfaceSection::new(rf("-4*t^2*(5*t-2)"), rf("4*t^2*(t+1)*(25*t-2)"));
    let gram = an.gram(&[p.clone(), q.clone()]).unwrap();
    assert_eq!(gram[0][0], Rat::from_frac(13, 21));
    assert_eq!(gram[0][1], Rat::from_frac(4, 21));
    assert_eq!(gram[1][1], Rat::from_frac(5, 21));

    let (rho, disc) = an.mw_summary(&[p, q], 1).unwrap();
    assert_eq!(rho, 20);
    assert_eq!(disc, Rat::from_int(112)); // 2^4 * 7
}

#[test]
fn disc64_honestly_elliptic_audit() {
    // y^2 = x^3 + (t^6-14t^5+23t^4+108t^3+23t^2-14t+1) x^2
    //        - 16 t^4 (t^2-10t-7)(7t^2+10t-1) x
    let s = EllipticSurface::new(
        upoly("t^6-14*t^5+23*t^4+108*t^3+23*t^2-14*t+1"),
        upoly("-16*t^4*(t^2-10*t-7)*(7*t^2+10*t-1)"),
        UniPoly::zero(),
        3,
    )
    .unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    assert_eq!(an.euler, 36);
    assert_eq!(an.trivial_rank, 28);
    assert_eq!(find_type(&an, "inf"), Kodaira::I(8));
    assert_eq!(find_type(&an, "t"), Kodaira::I(8));
    assert_eq!(find_type(&an, "t - 1"), Kodaira::I(2));
    assert_eq!(find_type(&an, "t + 1"), Kodaira::I(4));
    assert_eq!(find_type(&an, "t^2 - 10*t - 7"), Kodaira::I(2));
    assert_eq!(find_type(&an, "t^2 + 10/7*t - 1/7"), Kodaira::I(2));
    assert_eq!(find_type(&an, "t^2 - 10*t + 1"), Kodaira::I(3));

    let p = SurfaceSection::new(
        rf("4*t*(7*t^2+10*t-1)"),
        rf("4*t*(t+1)*(t^2-10*t+1)*(7*t^2+10*t-1)"),
    );
    // Q has y-coordinate 12 sqrt(-3) (t-1)(t+1)^2 (t^2-10t-7)
    let q = SurfaceSection::with_twist(
        rf("4*(t^2-10*t-7)"),
        rf("12*(t-1)*(t+1)^2*(t^2-10*t-7)"),
        Rat::from_int(-3),
    );
    let tors = SurfaceSection::new(rf("0"), rf("0"));
    let ht = an.height(&tors).unwrap();
    assert!(ht.is_zero());

    let hp = an.height(&p).unwrap();
    let hq = an.height(&q).unwrap();
    assert_eq!(hp, Rat::from_frac(1, 6));
    assert_eq!(hq, Rat::from_frac(3, 2));
    let pq = an.pairing(&p, &q).unwrap();
    assert!(pq.is_zero(), "P,Q not orthogonal: {pq}");

    let (rho, disc) = an.mw_summary(&[p, q], 2).unwrap();
    assert_eq!(rho, 30);
    assert_eq!(disc, Rat::from_int(512 * 9)); // 2^9 * 3^2
}

#[test]
fn disc81_internal_consistency() {
    // The printed fiber list for this surface is internally inconsistent;
    // the audit must produce Sigma e = 36 and trivial rank 27, and the
    // printed height matrix must reproduce from the printed sections.
    let s = EllipticSurface::new(
        upoly("4*(44*t^5+149*t^4-184*t^3+280*t^2-128*t+16)"),
        upoly("64*t^5*(125*t^5+1403*t^4-946*t^3+1672*t^2+472*t-176)"),
        upoly("256*t^9*(13625*t^5-3964*t^4+18780*t^3+3568*t^2+17296*t-4096)"),
        3,
    )
    .unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    assert_eq!(an.euler, 36);
    assert_eq!(an.trivial_rank, 27);

    let p = SurfaceSection::new(
        rf("128*t^3-256*t^4"),
        rf("16*t^3*(3*t-4)*(25*t^3-66*t^2+84*t-16)"),
    );
    let q = SurfaceSection::new(
        rf("16*t^4*(t^2-7*t-2)"),
        rf("16*t^4*(t^2-2*t+4)*(4*t^3-12*t^2+21*t-4)"),
    );
    let gram = an.gram(&[p.clone(), q.clone()]).unwrap();
    assert_eq!(gram[0][0], Rat::one());
    assert_eq!(gram[0][1], Rat::from_frac(-12, 18));
    assert_eq!(gram[1][1], Rat::from_frac(17, 18));

    let (_, disc) = an.mw_summary(&[p, q], 1).unwrap();
    assert_eq!(disc, Rat::from_int(16 * 2187)); // 2^4 * 3^7
}

#[test]
fn disc100_audit() {
    let s = EllipticSurface::new(
        upoly("t^6+16*t^5+74*t^4+92*t^3+21*t^2+20*t+4"),
        upoly("8*t^2*(10*t^5+119*t^4+324*t^3+291*t^2+68*t+4)"),
        upoly("-16*t^4*(8*t^4+84*t^3+139*t^2+12*t-4)"),
        3,
    )
    .unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    assert_eq!(an.euler, 36);
    assert_eq!(an.trivial_rank, 27);
    assert_eq!(find_type(&an, "inf"), Kodaira::I(10));
    assert_eq!(find_type(&an, "t"), Kodaira::I(5));
    assert_eq!(find_type(&an, "t + 2"), Kodaira::IV);
    assert_eq!(find_type(&an, "t^2 + 3*t + 1"), Kodaira::I(2));
    assert_eq!(find_type(&an, "t^2 + 8*t - 4"), Kodaira::I(2));
    assert_eq!(find_type(&an, "t^3 + 26/3*t^2 + 14/3*t + 2/3"), Kodaira::I(3));

    let p = SurfaceSection::new(
        rf("-4*t^2*(3*t^2+26*t+5)"),
        rf("4*t^2*(t^2+8*t-4)*(3*t^3+26*t^2+14*t+2)"),
    );
    let hp = an.height(&p).unwrap();
    assert_eq!(hp, Rat::from_frac(1, 5));
}

#[test]
fn fiber_types_permute_under_chart_changes() {
    // t -> t + 1 permutes places with types
    let s = EllipticSurface::new(
        upoly("3*(t^2-4*t-1)*(3*t^2-4*t-3)"),
        upoly("96*t^2*(t+1)*(3*t+1)*(t^2-6*t-3)"),
        upoly("-256*t^3*(3*t+1)^2*(7*t^3-30*t^2-33*t-8)"),
        2,
    )
    .unwrap();
    let shift = |p: &UniPoly<Rat>| p.compose(&UniPoly::from_ints(&[1, 1]));
    let s2 = EllipticSurface::new(shift(&s.a2), shift(&s.a4), shift(&s.a6), 2).unwrap();
    let an = SurfaceAnalysis::new(s2).unwrap();
    assert_eq!(an.euler, 24);
    assert_eq!(an.trivial_rank, 18);
    assert_eq!(find_type(&an, "t + 1"), Kodaira::I(3));
    assert_eq!(find_type(&an, "t + 4/3"), Kodaira::I(4));
}
