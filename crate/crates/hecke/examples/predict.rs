//! Predicted images of the derived subgroup for every module up to equivalence.

use hecke::hoefsmit::HeckeParams;
use hecke::images::{predict_image_b, transversal_b};
use hecke::images::classify_field_case;
use hecke::make_field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(7)?;
    let params = HeckeParams::new(f.clone(), alpha, f.from_int(2), 4)?;
    let case = classify_field_case(&params)?;
    println!("field case {} (degrees {:?})", case.case_id, case.degrees);
    for lam in transversal_b(4, &case) {
        println!("{:<18} {}", lam.to_string(), predict_image_b(&lam, &case)?);
    }
    Ok(())
}
