"""
Shared fixtures.
"""
import pytest

from qappell.application.services.appell_service import AppellService
from qappell.application.services.family_factory import FamilyFactory
from qappell.application.services.operator_service import OperatorService
from qappell.application.services.qcore_service import QCoreService
from qappell.application.services.set_algebra_service import SetAlgebraService
from qappell.application.services.verification_service import SweepSettings, VerificationService
from qappell.domain.models.qcontext import QContext
from qappell.main import QAppellApp, create_app


@pytest.fixture
def ctx() -> QContext:
    """Generic parameters: q = 1/2, u = 1/3."""
    return QContext.of("1/2", "1/3")


@pytest.fixture
def classical_ctx() -> QContext:
    return QContext.of("1/2", "1")


@pytest.fixture
def family_factory() -> FamilyFactory:
    return FamilyFactory()


@pytest.fixture
def appell_service() -> AppellService:
    return AppellService()


@pytest.fixture
def operator_service(appell_service: AppellService) -> OperatorService:
    return OperatorService(appell_service)


@pytest.fixture
def set_algebra_service(appell_service: AppellService, family_factory: FamilyFactory) -> SetAlgebraService:
    return SetAlgebraService(appell_service, family_factory)


@pytest.fixture
def qcore_service() -> QCoreService:
    return QCoreService(seed=7)


@pytest.fixture
def verification_service(qcore_service, family_factory, appell_service, operator_service,
                         set_algebra_service) -> VerificationService:
    return VerificationService(qcore_service, family_factory, appell_service, operator_service,
                               set_algebra_service, max_workers=2)


@pytest.fixture
def small_settings() -> SweepSettings:
    return SweepSettings(max_n=3, order=3, leibniz_pairs=3, mehler_order=2, rogers_order=2, genfun_order=3)


@pytest.fixture
def app() -> QAppellApp:
    """Create the command-line app for testing."""
    return create_app()
