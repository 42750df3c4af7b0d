//! Invariant bilinear forms, the transpose intertwiner and a hermitian form.

use hecke::forms::{gram_b, gram_space_rep_b, hermitian_diag, transpose_intertwiner, verify_twisted_invariance};
use hecke::hoefsmit::HeckeParams;
use hecke::{make_field, DoublePartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(7)?;
    let params = HeckeParams::new(f.clone(), alpha, f.from_int(2), 3)?;
    let lam = DoublePartition::of(&[2], &[1]);

    let g = gram_b(&lam, &params);
    let rep = gram_space_rep_b(&lam, &params)?;
    println!("form on {:?}: {:?}, {:?}", g.space, g.kind, g.symmetry);
    println!("invariant: {}", verify_twisted_invariance(&rep, &g).all_hold());

    let l = transpose_intertwiner(&DoublePartition::of(&[1], &[1]), &f);
    println!("transpose intertwiner on ([1],[1]): {:?}", l.to_coeffs(&f));

    let u = make_field(29, 2)?;
    let a = u.find_element_of_order(15)?;
    let b = u.find_element_of_order(30)?;
    let up = HeckeParams::new(u.clone(), a, b, 3)?;
    let d = hermitian_diag(&lam, &up)?;
    let shown: Vec<String> = d.iter().map(|&x| u.show(x)).collect();
    println!("hermitian diagonal over F_{}: {shown:?}", u.q());
    Ok(())
}
