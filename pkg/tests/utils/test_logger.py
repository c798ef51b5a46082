import logging

from blindpair.config import settings
from blindpair.domain.entities import PillowConfig
from blindpair.usecase import GeneratePillowSampleUseCase
from blindpair.utils.logger import setup_function_logger, setup_logging


class TestSetupLogging:
    def test_level_override(self):
        setup_logging("warning")
        assert logging.getLogger().level == logging.WARNING
        setup_logging("INFO")
        assert logging.getLogger().level == logging.INFO

    def test_console_handler_on_stderr(self, capsys):
        setup_logging("INFO")
        logging.getLogger("blindpair.test").info("hello from the logger")
        captured = capsys.readouterr()
        assert "hello from the logger" in captured.err
        assert captured.out == ""


class TestFunctionLogger:
    def test_appends_csv_rows(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        setup_function_logger("example").info("10,0.500")
        setup_function_logger("example").info("20,0.750")
        lines = (tmp_path / "logs" / "performance" / "example.csv").read_text().splitlines()
        assert [line.split(",", 1)[1] for line in lines] == ["10,0.500", "20,0.750"]

    def test_pillow_generation_records_timing(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(settings, "PERF_LOG", True)
        GeneratePillowSampleUseCase(threads=1).execute(PillowConfig(m=4, reps=3, seed=0))
        assert any((tmp_path / "logs" / "performance").glob("*.csv"))
