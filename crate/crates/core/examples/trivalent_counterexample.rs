//! At the trivalent node of D4 the two deciders can disagree.

use twisted_cubes::cartier::cartier_point;
use twisted_cubes::verify::{
    check_cartan_sum_trichotomy, check_main_theorem, extract_walk_from_cartier,
};
use twisted_cubes::walks::is_hesitant_jumping_ell_walk;
use twisted_cubes::{DynkinDiagram, TwistParams};

fn main() -> twisted_cubes::Result<()> {
    let d4 = DynkinDiagram::d(4)?;
    let word = [2, 2, 1, 3, 4, 2];
    let ell = [4, 2, 0, 0, 0, 1];

    let r = check_main_theorem(&d4, &word, &ell)?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));

    let p = TwistParams::from_word_and_ell(&d4, &word, &ell)?;
    if let Some(w) = &r.cartier_witness {
        println!("m at {}: {:?}", w.sigma, cartier_point(&p, &w.sigma)?.m);
        if let Some(idx) = extract_walk_from_cartier(&p, &w.sigma)? {
            let sub: Vec<usize> = idx.iter().map(|&j| word[j - 1]).collect();
            let sub_ell: Vec<u32> = idx.iter().map(|&j| ell[j - 1]).collect();
            println!(
                "extracted indices {idx:?}, letters {sub:?}: hesitant jumping ell-walk {}",
                is_hesitant_jumping_ell_walk(&d4, &sub, &sub_ell)?
            );
        }
    }

    // Node 2 repeats but also touches three earlier neighbours: 2 - 3 = -1.
    println!(
        "Cartan-sum trichotomy for prefix (2,1,3,4), next 2: {}",
        check_cartan_sum_trichotomy(&d4, &[2, 1, 3, 4], 2)?
    );
    Ok(())
}
