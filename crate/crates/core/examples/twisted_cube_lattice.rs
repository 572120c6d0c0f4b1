//! Signed lattice points of a twisted cube, from a word or from raw c.

use twisted_cubes::twistcube::LatticeSummary;
use twisted_cubes::{DynkinDiagram, TwistParams};

fn show(label: &str, p: &TwistParams) {
    let s = LatticeSummary::of(p);
    println!(
        "{label}: {} points, +{} -{}, signed count {}",
        s.points.len(),
        s.positive,
        s.negative,
        s.signed_count
    );
    for q in s.points.iter().filter(|q| q.sign < 0) {
        println!("  negative point {:?}", q.x);
    }
}

fn main() -> twisted_cubes::Result<()> {
    let raw = TwistParams::new(vec![vec![0, 1], vec![0, 0]], vec![2, 3])?;
    show("c12=1, ell=(2,3)", &raw);
    println!("  box {:?}", raw.bounding_box());

    let a2 = DynkinDiagram::a(2)?;
    for ell in [[3, 1, 1], [2, 1, 2]] {
        let p = TwistParams::from_word_and_ell(&a2, &[1, 2, 1], &ell)?;
        show(&format!("A2 (1,2,1) ell={ell:?}"), &p);
    }

    let p = TwistParams::from_word(&DynkinDiagram::d(4)?, &[1, 2, 3, 2, 4], &[2, 1, 3, 1, 1])?;
    println!("\nD4 (1,2,3,2,4), mult (2,1,3,1,1): ell = {:?}", p.ell());
    for row in p.c_matrix() {
        println!("  {row:?}");
    }
    show("D4", &p);
    Ok(())
}
