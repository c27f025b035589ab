"""
Command-line application factory.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Type

from qappell.config.settings import Config

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], Tuple[str, int]]
ErrorHandler = Callable[[Exception], int]


class QAppellApp:
    """Parses arguments, dispatches to a controller and maps errors to exit codes."""

    def __init__(self, config: Config, parser: argparse.ArgumentParser):
        self.config = config
        self.parser = parser
        self._commands: Dict[str, Handler] = {}
        self._error_handlers: List[Tuple[Type[Exception], ErrorHandler]] = []

    def register_command(self, name: str, handler: Handler) -> None:
        self._commands[name] = handler

    def errorhandler(self, *exception_classes: Type[Exception]) -> Callable[[ErrorHandler], ErrorHandler]:
        """Decorator registering a handler; earlier registrations win."""

        def decorator(handler: ErrorHandler) -> ErrorHandler:
            for exception_class in exception_classes:
                self._error_handlers.append((exception_class, handler))
            return handler

        return decorator

    def handle_error(self, error: Exception) -> int:
        for exception_class, handler in self._error_handlers:
            if isinstance(error, exception_class):
                return handler(error)
        raise error

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Run one command.

        Args:
            argv: Arguments without the program name (default: sys.argv[1:])

        Returns:
            Process exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2
        try:
            output, code = self._commands[args.command](args)
        except Exception as e:
            return self.handle_error(e)
        sys.stdout.write(output)
        return code


def create_app(config_class=Config) -> QAppellApp:
    """
    Create and configure the command-line application.

    Args:
        config_class: Configuration class to use

    Returns:
        Configured application instance
    """
    logging.basicConfig(level=config_class.LOG_LEVEL, format=config_class.LOG_FORMAT, stream=sys.stderr)

    from qappell.application.services.appell_service import AppellService
    from qappell.application.services.family_factory import FamilyFactory
    from qappell.application.services.operator_service import OperatorService
    from qappell.application.services.qcore_service import QCoreService
    from qappell.application.services.set_algebra_service import SetAlgebraService
    from qappell.application.services.verification_service import VerificationService
    from qappell.infrastructure.loaders.json_descriptor_loader import JsonDescriptorLoader
    from qappell.interface.cli.controllers.eval_controller import EvalController
    from qappell.interface.cli.controllers.family_request import FamilyRequest
    from qappell.interface.cli.controllers.table_controller import TableController
    from qappell.interface.cli.controllers.verify_controller import VerifyController
    from qappell.interface.cli.parser import build_parser

    family_factory = FamilyFactory()
    appell_service = AppellService()
    operator_service = OperatorService(appell_service)
    verification_service = VerificationService(
        QCoreService(config_class.RANDOM_SEED),
        family_factory,
        appell_service,
        operator_service,
        SetAlgebraService(appell_service, family_factory),
        max_workers=config_class.MAX_WORKERS,
    )
    loader = JsonDescriptorLoader()
    family_request = FamilyRequest(family_factory, appell_service, operator_service, loader)

    app = QAppellApp(config_class, build_parser(config_class))
    app.register_command("table", TableController(family_request).handle)
    app.register_command("eval", EvalController(family_request).handle)
    app.register_command("verify", VerifyController(verification_service, loader, config_class).handle)

    from qappell.interface.cli.errors.handlers import register_error_handlers
    register_error_handlers(app)

    return app


def main(argv: Optional[Sequence[str]] = None) -> int:
    return create_app().run(argv)
