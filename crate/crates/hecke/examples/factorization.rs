//! Detect when two modules give isomorphic, dual or Galois-twisted images.

use hecke::hoefsmit::{build_rep_b, HeckeParams};
use hecke::images::{test_factorization, Transform};
use hecke::{make_field, DoublePartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(29, 1)?;
    let alpha = f.find_element_of_order(7)?;
    let params = HeckeParams::new(f.clone(), alpha, f.from_int(2), 3)?;
    let a = DoublePartition::of(&[2], &[1]);
    for b in [DoublePartition::of(&[1, 1], &[1]), DoublePartition::of(&[1], &[2]), DoublePartition::of(&[1], &[1, 1])] {
        let ra = build_rep_b(&a, &params)?;
        let rb = build_rep_b(&b, &params)?;
        for t in [Transform::Id, Transform::Dual] {
            let k = test_factorization(&ra, &rb, t)?;
            println!("{a} vs {b} under {t:?}: {:?}", k.relation);
        }
    }
    Ok(())
}

