//! Untwistedness through the Cartier data of the fan, with witnesses.

use twisted_cubes::cartier::{cartier_point, fan, is_untwisted, SignVector};
use twisted_cubes::{DynkinDiagram, TwistParams};

fn main() -> twisted_cubes::Result<()> {
    let a2 = DynkinDiagram::a(2)?;
    for ell in [[3, 1, 1], [2, 1, 2], [4, 1, 2]] {
        let p = TwistParams::from_word_and_ell(&a2, &[1, 2, 1], &ell)?;
        let v = is_untwisted(&p)?;
        println!(
            "ell {ell:?}: {}",
            serde_json::to_string(&v).expect("serializes")
        );
    }

    let p = TwistParams::from_word_and_ell(&a2, &[1, 2, 1], &[2, 1, 2])?;
    println!("\nall Cartier points for ell (2,1,2):");
    for index in 0..8 {
        let sigma = SignVector::nth(3, index);
        println!("  {sigma}: {:?}", cartier_point(&p, &sigma)?.m);
    }
    let f = fan(&p);
    println!("\nrays e+ {:?}", f.plus_rays);
    println!("rays e- {:?}", f.minus_rays);
    Ok(())
}
