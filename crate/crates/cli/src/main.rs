use std::io;

fn main() {
    let (stdout, stderr, stdin) = (io::stdout(), io::stderr(), io::stdin());
    let mut streams = solgroup_cli::Streams {
        out: &mut stdout.lock(),
        err: &mut stderr.lock(),
        stdin: &mut stdin.lock(),
    };
    let code = solgroup_cli::run(std::env::args_os(), &mut streams);
    std::process::exit(code);
}
