//! Enumerate the image of the derived subgroup for a small module and compare
//! with the predicted group order.

use hecke::hoefsmit::{build_rep_b, HeckeParams};
use hecke::images::{classify_field_case, derived_subgroup_order, predict_image_b, DEFAULT_CAP};
use hecke::{make_field, DoublePartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(7)?;
    let params = HeckeParams::new(f.clone(), alpha, f.from_int(2), 2)?;
    let lam = DoublePartition::of(&[1], &[1]);
    let rep = build_rep_b(&lam, &params)?;
    let order = derived_subgroup_order(&rep.gens, &f, DEFAULT_CAP)?;
    let predicted = predict_image_b(&lam, &classify_field_case(&params)?)?;
    println!("{lam}: enumerated {order} elements, predicted {predicted} of order {:?}", predicted.order());
    Ok(())
}
