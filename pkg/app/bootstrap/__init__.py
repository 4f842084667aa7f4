from app.bootstrap.container import AppContainer, build_container, get_container
from app.bootstrap.runtime import init_environment

__all__ = ["AppContainer", "build_container", "get_container", "init_environment"]
