//! The operators on C3: squares, the power formula and a hand-built certificate.

use udbound::{parse_diagram, OperatorContext, Polynomial};

fn main() -> udbound::Result<()> {
    let ctx = OperatorContext::new(parse_diagram("C3")?.cartan());
    for i in 1..=3 {
        println!("alpha_{i} = {}", ctx.alpha(i));
    }
    let p = Polynomial::parse("x1^3*x2 - 2*x3^2", 3)?;
    let once = ctx.ddiff(2, &p)?;
    println!("d2({p}) = {once}");
    println!("d2 d2({p}) = {}", ctx.ddiff(2, &once)?);

    let x3 = Polynomial::var(3, 3);
    println!("d3(x3^3) = {}", ctx.ddiff(3, &x3.pow(3))?);

    let x = Polynomial::parse("x1^5*x2^3*x3", 3)?;
    let word = [1, 2, 3, 2, 1, 2, 3, 2, 3];
    println!("d_{word:?}({x}) = {}", ctx.apply_word(&word, &x)?);
    Ok(())
}
