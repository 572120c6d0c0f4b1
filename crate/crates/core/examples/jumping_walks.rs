//! Walk predicates and the subword search.

use twisted_cubes::walks::{
    find_hesitant_jumping_ell_subword, hesitant_jumping_subwords, is_diagram_walk,
    is_hesitant_jumping_walk, is_jumping_walk,
};
use twisted_cubes::DynkinDiagram;

fn main() -> twisted_cubes::Result<()> {
    let a5 = DynkinDiagram::a(5)?;
    for w in [
        vec![3, 2, 1, 4, 5],
        vec![1, 3, 2, 4],
        vec![2, 2, 3, 1],
        vec![1, 2, 3, 2],
    ] {
        println!(
            "A5 {w:?}: jumping {}, hesitant jumping {}, diagram walk {}",
            is_jumping_walk(&a5, &w)?,
            is_hesitant_jumping_walk(&a5, &w)?,
            is_diagram_walk(&a5, &w)?,
        );
    }

    let a3 = DynkinDiagram::a(3)?;
    let word = [1, 2, 1, 3, 2, 1];
    println!("\nhesitant jumping subwords of {word:?} on A3:");
    for idx in hesitant_jumping_subwords(&a3, &word)? {
        let letters: Vec<usize> = idx.iter().map(|&j| word[j - 1]).collect();
        println!("  indices {idx:?} -> {letters:?}");
    }

    for ell in [[4, 3, 2, 0, 1, 1], [4, 4, 1, 0, 1, 0]] {
        match find_hesitant_jumping_ell_subword(&a3, &word, &ell)? {
            Some(hit) => println!("ell {ell:?}: not avoiding, witness {}", hit),
            None => println!("ell {ell:?}: avoiding"),
        }
    }
    Ok(())
}
