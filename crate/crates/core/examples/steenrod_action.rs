//! Milnor basis operations acting on F2[t, t'] and on truncated rings.

use k4coh::steenrod::{dickson_p0, dickson_p1, milnor_act, milnor_act_truncated, F2Poly, MilnorOp};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names = ["t", "t'"];
    let p = F2Poly::parse("t^3*t' + t'^2", &names)?;
    for op in ["Sq(1)", "Sq(2)", "Sq(0,1)", "Sq(2,1)"] {
        let op: MilnorOp = op.parse()?;
        println!(
            "{op}({}) = {}",
            p.show(&names),
            milnor_act(&op, &p).show(&names)
        );
    }

    println!("p0 = {}", dickson_p0().show(&names));
    println!("p1 = {}", dickson_p1().show(&names));

    // In F2[c]/(c^4) the top class is c^3 and everything above vanishes.
    let c = F2Poly::parse("c", &["c"])?;
    for i in 0..4 {
        let r = milnor_act_truncated(&MilnorOp::sq(i), &c.pow(2), &[Some(4)]);
        println!("Sq^{i}(c^2) in F2[c]/(c^4) = {}", r.show(&["c"]));
    }
    Ok(())
}
