from .polytope_repository import PolytopeRepository
from .fixture_repository import FixtureRepository, FIXTURES
