"""
A small command router in the shape of an API router: handlers are registered with a
decorator on a ``CommandRouter`` and mounted on a ``CommandApp`` under a verb prefix.
"""
import argparse
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ValidationError

from src.config import DEFAULT_SEED, DEFAULT_TOLERANCE, DEFAULT_TRIALS
from src.errors import ErrorRegistry, Fgsp6Exception, UsageError
from src.schemas.general import RunConfig

logger = logging.getLogger("fgsp6.routers")

Argument = Tuple[Tuple[str, ...], dict]


def arg(*flags: str, **kwargs) -> Argument:
    return flags, kwargs


@dataclass
class CommandResult:
    payload: Union[BaseModel, List[BaseModel]]
    text: List[str]
    exit_code: int = 0


Handler = Callable[[argparse.Namespace, RunConfig], CommandResult]


@dataclass
class Route:
    name: Optional[str]
    handler: Handler
    help: str = ""
    arguments: Sequence[Argument] = field(default_factory=tuple)


class CommandRouter:
    def __init__(self):
        self.routes: List[Route] = []
        self.root: Optional[Route] = None

    def command(self, name: Optional[str] = None, help: str = "", arguments: Sequence[Argument] = ()):
        """Register a handler; ``name=None`` binds it to the verb itself."""
        def decorator(fn: Handler) -> Handler:
            route = Route(name=name, handler=fn, help=help or (fn.__doc__ or "").strip(), arguments=arguments)
            if name is None:
                self.root = route
            else:
                self.routes.append(route)
            return fn
        return decorator


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the verb from being reset by the subparser
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON on stdout")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=f"random seed (default {DEFAULT_SEED})")
    parser.add_argument("--trials", type=int, default=argparse.SUPPRESS,
                        help=f"instances per randomized property (default {DEFAULT_TRIALS})")
    parser.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"tolerance for numeric checks (default {DEFAULT_TOLERANCE})")
    return parser


def _add_arguments(parser: argparse.ArgumentParser, arguments: Sequence[Argument]):
    for flags, kwargs in arguments:
        parser.add_argument(*flags, **kwargs)


class CommandApp:
    def __init__(self, prog: str = "fgsp6", description: str = ""):
        self.errors = ErrorRegistry()
        self._middleware: List[Callable] = []
        self._globals = _global_flags()
        self.parser = argparse.ArgumentParser(prog=prog, description=description, parents=[self._globals])
        self._verbs = self.parser.add_subparsers(dest="verb", metavar="verb")
        self._verbs.required = True

    def add_middleware(self, middleware: Callable[[str, Callable[[], int]], int]):
        self._middleware.append(middleware)

    def include_router(self, router: CommandRouter, prefix: str, help: str = ""):
        group = self._verbs.add_parser(prefix, help=help, parents=[self._globals])
        if router.root is not None:
            _add_arguments(group, router.root.arguments)
            group.set_defaults(_route=router.root, _command=prefix)
        if router.routes:
            sub = group.add_subparsers(dest=f"{prefix}_command", metavar="command")
            sub.required = router.root is None
            for route in router.routes:
                parser = sub.add_parser(route.name, help=route.help, parents=[self._globals])
                _add_arguments(parser, route.arguments)
                parser.set_defaults(_route=route, _command=f"{prefix} {route.name}")

    def _run_config(self, ns: argparse.Namespace) -> RunConfig:
        try:
            return RunConfig(
                seed=getattr(ns, "seed", DEFAULT_SEED),
                trials=getattr(ns, "trials", DEFAULT_TRIALS),
                tolerance=getattr(ns, "tol", DEFAULT_TOLERANCE),
                output="json" if getattr(ns, "json", False) else "text",
            )
        except ValidationError as exc:
            raise UsageError(f"Invalid global option: {exc.errors()[0]['msg']}") from exc

    @staticmethod
    def _emit(result: CommandResult, config: RunConfig):
        if config.as_json:
            payload = result.payload
            if isinstance(payload, list):
                print("[" + ",".join(p.model_dump_json() for p in payload) + "]")
            else:
                print(payload.model_dump_json())
        else:
            for line in result.text:
                print(line)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            ns = self.parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 2

        as_json = bool(getattr(ns, "json", False))
        try:
            config = self._run_config(ns)
        except UsageError as exc:
            return self.errors.handle(exc, as_json)

        route: Route = ns._route

        def endpoint() -> int:
            result = route.handler(ns, config)
            self._emit(result, config)
            return result.exit_code

        call_next = endpoint
        for middleware in reversed(self._middleware):
            call_next = (lambda mw, nxt: lambda: mw(ns._command, nxt))(middleware, call_next)

        try:
            return call_next()
        except Fgsp6Exception as exc:
            return self.errors.handle(exc, as_json)
