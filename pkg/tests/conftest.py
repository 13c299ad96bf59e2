import time

SESSION_T0 = time.monotonic()


def pytest_collection_modifyitems(config, items):
    # Acceptance runs last so its runtime criterion sees the whole session.
    items.sort(key=lambda it: it.path.name == "test_acceptance.py")
