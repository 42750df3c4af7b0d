//! Finite field arithmetic: extension fields, element orders, the involution.

use hecke::make_field;

fn main() -> Result<(), hecke::GfError> {
    let f = make_field(29, 2)?;
    println!("F_{} with modulus {:?}", f.q(), f.modulus());
    let a = f.find_element_of_order(15)?;
    println!("alpha = {}  order {}", f.show(a), f.element_order(a)?);
    println!("alpha + 1/alpha = {}", f.show(f.plus_inverse(a)));
    println!("degree of F_p(alpha) = {}", f.subfield_degree(&[a]));
    if let Some(e) = f.epsilon(a) {
        println!("eps(alpha) = {}  (alpha^29 = {})", f.show(e), f.show(f.pow(a, 29)));
    }
    let b = f.from_int(2);
    println!("beta = 2 admissible at n = 4: {}", f.beta_is_admissible(a, b, 4));
    Ok(())
}
