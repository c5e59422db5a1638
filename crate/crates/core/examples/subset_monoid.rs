//! Star products of subsets of the pair groupoid and their inverses.

use grumod::Groupoid;

fn main() -> grumod::Result<()> {
    let g = Groupoid::pair(3)?;
    let a = g.parse_subset("{(1,2),(2,3)}")?;
    let b = g.parse_subset("{(2,1),(3,2)}")?;
    println!("{} * {} = {}", g.format_subset(&a), g.format_subset(&b), g.format_subset(&g.star(&a, &b)?));

    // a permutation of the objects is invertible
    let p = g.parse_subset("{(1,2),(2,3),(3,1)}")?;
    let inv = g.subset_inverse(&p);
    println!("{} has inverse {}", g.format_subset(&p), g.format_subset(&inv));
    println!("check: {}", g.format_subset(&g.star(&p, &inv)?));

    // two arrows out of the same object are not
    let q = g.parse_subset("{(1,1),(1,2)}")?;
    println!("{} invertible: {}", g.format_subset(&q), g.subset_is_invertible(&q).is_invertible());

    for s in g.elements() {
        println!("Σ_{} = {}", g.name(s), g.format_subset(&g.sigma_set(s)));
    }
    match g.star(&g.parse_subset("{(1,2)}")?, &g.parse_subset("{(1,2)}")?) {
        Err(e) => println!("{{(1,2)}} * {{(1,2)}}: {e}"),
        Ok(p) => println!("unexpected product {}", g.format_subset(&p)),
    }
    Ok(())
}
