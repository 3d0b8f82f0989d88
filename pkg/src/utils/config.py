# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import yaml
import logging
from logging.handlers import RotatingFileHandler
from pathlib          import Path
from typing           import Any, Dict, Optional
from .constants       import LOGGER_NAME
from .exceptions      import ConfigError

ROOT_DIR = Path(__file__).parent.parent.parent
DEFAULT_CONFIG_FILE = ROOT_DIR / 'config' / 'config.yaml'

class Config:
    """Settings handler for the interference lab"""

    _instance = None
    _config: Dict[str, Any] = {}
    _source: Optional[Path] = None

    def __new__(cls, config_file: Optional[Path] = None):
        """Ensure singleton instance"""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self, config_file: Optional[Path] = None):
        """Initialize settings if not already loaded"""
        if not self._config:
            self._load_config(Path(config_file) if config_file else DEFAULT_CONFIG_FILE)
            self._setup_logging()
        elif config_file and Path(config_file).resolve() != self._source.resolve():
            logging.getLogger(LOGGER_NAME).warning(
                f"Settings already loaded from {self._source}; ignoring {config_file}"
            )

    @classmethod
    def reset(cls) -> None:
        """Forget the loaded settings so the next Config() reloads them"""
        cls._instance = None
        cls._config = {}
        cls._source = None

    def _load_config(self, config_file: Path) -> None:
        """Load settings from a yaml (or json) file"""
        try:
            with open(config_file, 'r') as f:
                loaded = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Failed to load config: {str(e)}")

        if not isinstance(loaded, dict):
            raise ConfigError(f"Config file {config_file} must hold a mapping")

        type(self)._config = loaded
        type(self)._source = config_file

    def _resolve(self, path: str) -> Path:
        """Resolve a configured path against the project root"""
        p = Path(path)
        return p if p.is_absolute() else ROOT_DIR / p

    def _setup_logging(self) -> None:
        """Setup logging configuration"""
        try:
            log_config = self._config['logging']
            log_dir = self._resolve(self._config['paths']['log_dir'])
            log_dir.mkdir(parents=True, exist_ok=True)

            handlers: list[logging.Handler] = [
                RotatingFileHandler(
                    log_dir / log_config['file'],
                    maxBytes=log_config['max_bytes'],
                    backupCount=log_config['backup_count']
                )
            ]
            if log_config.get('console', False):
                handlers.append(logging.StreamHandler())

            logging.basicConfig(
                level=getattr(logging, log_config['level']),
                format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                handlers=handlers
            )
        except (KeyError, AttributeError, OSError) as e:
            raise ConfigError(f"Failed to setup logging: {str(e)}")

    def _section(self, name: str) -> Dict[str, Any]:
        try:
            return self._config[name]
        except KeyError:
            raise ConfigError(f"Config file {self._source} has no '{name}' section")

    @property
    def source(self) -> Optional[Path]:
        """Get the file the settings were loaded from"""
        return self._source

    @property
    def paths(self) -> Dict[str, Any]:
        """Get paths configuration"""
        return self._section('paths')

    @property
    def out_dir(self) -> Path:
        """Get the default output directory"""
        return self._resolve(self.paths['out_dir'])

    @property
    def logging(self) -> Dict[str, Any]:
        """Get logging configuration"""
        return self._section('logging')

    @property
    def tasks(self) -> Dict[str, Any]:
        """Get per-task defaults"""
        return self._section('tasks')

    @property
    def learner(self) -> Dict[str, Any]:
        """Get learner defaults"""
        return self._section('learner')

    @property
    def profiles(self) -> Dict[str, Any]:
        """Get the named experiment profiles"""
        return self._section('profiles')

    @property
    def evaluation(self) -> Dict[str, Any]:
        """Get evaluation and statistics settings"""
        return self._section('evaluation')

    @property
    def tile_coding(self) -> Dict[str, Any]:
        """Get tile coder settings"""
        return self._section('tile_coding')
