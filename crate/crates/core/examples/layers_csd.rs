//! Coheight layers, Nagata transforms, quotients by `Inv_X`, and the CSD
//! rank decomposition.

use radfact::finite_domain::{csd_decompose, layer_sequence, nagata_transform, quotient_check};
use radfact::model::Model;
use radfact::spectra::{FiniteTreeSpectrum, NodeSet};

fn show(t: &FiniteTreeSpectrum, s: &NodeSet) -> String {
    let names: Vec<String> = t.names(s).iter().map(ToString::to_string).collect();
    format!("{{{}}}", names.join(", "))
}


fn main() -> radfact::Result<()> {
    let model = Model::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/FT1.json"))?;
    let t = model.tree()?;
    let seq = layer_sequence(t);
    for (k, y) in seq.layers.iter().enumerate() {
        println!("Y_{k} = {}", show(t, y));
    }
    println!("valid layering: {}", seq.validate(t));

    let n = nagata_transform(t, &t.maximal())?;
    println!("deleting Max leaves {}", show(&n.spectrum, &(0..n.spectrum.len()).collect()));

    for x in t.up_closed_sets().iter().filter(|x| x.len() == 3) {
        let r = quotient_check(t, x)?;
        println!("X = {}: {} + {} = {} ({})", show(t, x), r.rank_inv_x, r.rank_quotient, r.nonzero_primes, r.passed);
    }

    let csd = csd_decompose(t);
    for l in &csd.layers {
        println!("layer {}: rank {}", show(t, &l.x), l.rank);
    }
    println!("total rank {}", csd.total_rank);
    Ok(())
}
