//! The command-line front end driven in-process.

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let runs: [&[&str]; 6] = [
        &["layers", "FT1.json"],
        &["sp-rank", "OS1.json", "--budget", "5,3"],
        &["crit", "OS1.json", "--point", "inf", "--budget", "5,3"],
        &["factor", "BS1.json", "--ideal", "[2,1,0,3]"],
        &["jl", "FT1.json", "--ideal", r#"{"M1": -2, "M4": 3}"#, "--json"],
        &["int-v", "OS1.json"],
    ];
    for args in runs {
        let model = format!("{dir}/{}", args[1]);
        let argv = ["radfact", args[0], &model].into_iter().chain(args[2..].iter().copied());
        let (code, out) = radfact::cli::run(argv);
        println!("$ radfact {}\n{out}\n[exit {code}]\n", args.join(" "));
    }
}
