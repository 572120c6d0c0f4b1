//! From a dominant weight to multiplicities, ell, and both walk verdicts.

use twisted_cubes::twistcube::{ell_from_weight, mult_from_weight};
use twisted_cubes::verify::check_corollary;
use twisted_cubes::DynkinDiagram;

fn main() -> twisted_cubes::Result<()> {
    let a3 = DynkinDiagram::a(3)?;
    let word = [1, 2, 1, 3, 2, 1];
    for lambda in [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 1, 1]] {
        let r = check_corollary(&a3, &word, &lambda)?;
        println!(
            "lambda {lambda:?}: mult {:?}, ell {:?}, lambda-walk {:?}, ell-walk {:?}, untwisted {}, agree {}",
            mult_from_weight(&a3, &word, &lambda)?,
            ell_from_weight(&a3, &word, &lambda)?,
            r.lambda_witness.as_ref().map(|h| h.indices.clone()),
            r.ell_witness.as_ref().map(|h| h.indices.clone()),
            r.untwisted,
            r.agree,
        );
    }
    Ok(())
}
