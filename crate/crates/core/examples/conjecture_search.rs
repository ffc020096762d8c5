//! A small search run through the library entry point used by the CLI.

use reachkit::cli::run;

fn main() {
    let args = [
        "reachkit",
        "search",
        "--count",
        "200",
        "--seed",
        "7",
        "--max-n",
        "14",
        "--conjecture",
        "all",
    ];
    let code = run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
