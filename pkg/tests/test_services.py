import services
from services import group_service, search_service


def test_package_exports_facade_names():
    for name in group_service.__all__ + search_service.__all__:
        assert name in services.__all__
    for name in services.__all__:
        assert hasattr(services, name), name
    assert len(set(services.__all__)) == len(services.__all__)
