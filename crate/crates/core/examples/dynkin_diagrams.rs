//! Distances and Cartan integers on the simply-laced diagrams.
//!
//!     cargo run --example dynkin_diagrams -- D5

use twisted_cubes::DynkinDiagram;

fn main() -> twisted_cubes::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D4".to_string());
    let d: DynkinDiagram = name.parse()?;
    let r = d.rank();

    println!("{d}: rank {r}, edges {:?}", d.adjacency());
    println!("\nCartan matrix:");
    for row in d.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("{}", cells.join(""));
    }
    println!("\nnode distances:");
    for a in 1..=r {
        let cells: Vec<String> = (1..=r)
            .map(|b| d.node_distance(a, b).map(|x| format!("{x:>3}")))
            .collect::<Result<_, _>>()?;
        println!("{}", cells.join(""));
    }
    let far = d.set_distance(&[1], &[r])?;
    println!(
        "\nd({{1}}, {{{r}}}) = {far:?}; an empty set is at distance {:?}",
        d.set_distance(&[], &[1])?
    );
    Ok(())
}
