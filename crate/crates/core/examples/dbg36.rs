use splitjac::fibration::height::SurfaceAnalysis;
use splitjac::fibration::{EllipticSurface, SurfaceSection};
use splitjac::parse::parse_poly;
use splitjac::rat::Rat;
use splitjac::unipoly::{RatFun1, UniPoly};

fn upoly(src: &str) -> UniPoly<Rat> {
    parse_poly(src).unwrap().to_unipoly().expect("univariate input")
}
fn rf(src: &str) -> RatFun1<Rat> {
    let f = splitjac::parse::parse_ratfun(src).unwrap();
    RatFun1::new(f.num().to_unipoly().unwrap(), f.den().to_unipoly().unwrap())
}

fn main() {
    let s = EllipticSurface::new(
        upoly("3*(t^2-4*t-1)*(3*t^2-4*t-3)"),
        upoly("96*t^2*(t+1)*(3*t+1)*(t^2-6*t-3)"),
        upoly("-256*t^3*(3*t+1)^2*(7*t^3-30*t^2-33*t-8)"),
        2,
    ).unwrap();
    let an = SurfaceAnalysis::new(s).unwrap();
    let p = SurfaceSection::new(rf("8*(3*t+1)*(t^2-2*t-1)"), rf("8*(3*t+1)^2*(t^3-3*t^2-3*t-1)"));
    let q = SurfaceSection::new(rf("-4*t*(t-1)*(3*t+1)"), rf("4*t*(3*t+1)^2*(t^2-6*t-3)"));
    for (name, sec) in [("P", &p), ("Q", &q)] {
        let comps = an.components(sec).unwrap();
        println!("--- section {name}");
        for (f, c) in an.fibers.iter().zip(&comps) {
            println!("  {} [{}] deg {} -> {:?}", f.place.canonical_string(), f.kodaira, f.place.degree(), c);
        }
        println!("  height = {}", an.height(sec).unwrap());
    }
}
