//! Type B matrices, relation checks, and evaluation of an Artin word.

use hecke::hoefsmit::{build_rep_b, check_defining_relations, eval_word, ArtinWord, HeckeParams};
use hecke::{make_field, DoublePartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(7)?;
    let params = HeckeParams::new(f.clone(), alpha, f.from_int(2), 3)?;
    let rep = build_rep_b(&DoublePartition::of(&[2], &[1]), &params)?;
    println!("{} has dimension {}", rep.label, rep.dim());
    for (name, m) in rep.names.iter().zip(&rep.gens) {
        println!("{name} = {:?}", m.to_coeffs(&f));
    }
    let report = check_defining_relations(&rep);
    for c in &report.checks {
        println!("  {:<24} {}", c.relation, c.holds);
    }
    let w = ArtinWord::new(vec![(0, 1), (1, 1), (0, -1), (1, -1)]);
    let m = eval_word(&rep, &w)?;
    println!("trace of [T, S1] = {}", f.show(m.trace(&f)));
    Ok(())
}
