//! Type D: labels, the split modules on equal components, and branching.

use hecke::hoefsmit::{check_defining_relations, Sign};
use hecke::typed::{branch_d, build_rep_d, d_labels, DLabel, DParams};
use hecke::{make_field, DoublePartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(14)?;
    let params = DParams::new(f, alpha, 4)?;
    for l in d_labels(4) {
        let r = build_rep_d(&l, &params)?;
        println!("{:<18} dim {:>2}  relations {}", l.to_string(), r.dim(), check_defining_relations(&r).all_hold());
    }
    let l = DLabel::new(DoublePartition::of(&[2, 1], &[2, 1]), Some(Sign::Plus))?;
    let parts: Vec<String> = branch_d(&l).iter().map(|m| m.to_string()).collect();
    println!("{l} restricts to {}", parts.join(" + "));
    Ok(())
}
