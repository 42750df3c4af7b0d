//! Double partitions, standard double tableaux and branching.

use hecke::tableaux::{double_partitions, standard_tableaux};
use hecke::DoublePartition;

fn main() {
    let lam = DoublePartition::of(&[2, 1], &[1]);
    println!("{lam}: dim {}", lam.dim());
    for t in standard_tableaux(&lam) {
        let cells: Vec<String> = (1..=lam.n())
            .map(|i| {
                let c = t.cell(i);
                format!("{i}:{}({},{})", if c.comp == 1 { "L" } else { "R" }, c.row, c.col)
            })
            .collect();
        println!("  {}", cells.join(" "));
    }
    println!("restricts to:");
    for mu in lam.branch_candidates() {
        println!("  {mu}");
    }
    let n = 4;
    let total: u128 = double_partitions(n).iter().map(|l| l.dim() * l.dim()).sum();
    println!("n = {n}: {} labels, sum of dim^2 = {total}", double_partitions(n).len());
}
