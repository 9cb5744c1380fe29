from ..command_support.output import _emit
from ..command_support.settings_access import current_settings
from ..verifier import verify_corpus


def verify_corpus_command(args) -> int:
    settings = current_settings(args)
    report = verify_corpus(settings.fixtures_dir, settings)
    _emit(report, "report.txt.j2", as_json=args.json, context_name="report")
    return 0 if report.status == "pass" else 1


def register(subparsers, common) -> None:
    verify = subparsers.add_parser("verify-corpus", parents=[common], help="run every check on a fixture directory")
    verify.add_argument("directory", nargs="?", help="fixture directory, default ./fixtures")
    verify.set_defaults(handler=verify_corpus_command)
