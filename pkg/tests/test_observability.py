"""Tests for tracing spans, logging sinks and the response envelope."""
import pytest
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import SimpleSpanProcessor
from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter


@pytest.fixture
def recorded_spans(monkeypatch):
    """Route pipeline spans into an in-memory exporter."""
    from app.shared.observability import tracing

    exporter = InMemorySpanExporter()
    provider = TracerProvider()
    provider.add_span_processor(SimpleSpanProcessor(exporter))
    monkeypatch.setattr(tracing, "_tracer", provider.get_tracer("test"))
    return exporter


class TestTracingModule:
    """Test OpenTelemetry tracing functionality."""

    def test_pipeline_span_without_setup_is_a_no_op(self):
        """Without setup the API's no-op tracer is used and nothing records."""
        from app.shared.observability.tracing import get_current_trace_id, pipeline_span

        with pipeline_span("cvol.test", tetrahedra=3) as span:
            assert not span.is_recording()
        assert get_current_trace_id() is None

    def test_pipeline_span_records_attributes(self, recorded_spans):
        """Test span attributes: None dropped, non-primitive values stringified."""
        from app.shared.observability.tracing import pipeline_span

        with pipeline_span("cvol.develop", unit_edge=None, tetrahedra=3, base=(0, 0, 1)):
            pass

        (span,) = recorded_spans.get_finished_spans()
        assert span.name == "cvol.develop"
        assert span.attributes["tetrahedra"] == 3
        assert span.attributes["base"] == "(0, 0, 1)"
        assert "unit_edge" not in span.attributes

    def test_complex_volume_emits_stage_spans(self, recorded_spans, figure_eight, figure_eight_shapes):
        """The pipeline nests one span per stage inside cvol.complex_volume."""
        from app.cvol.domain.pipeline import complex_volume

        complex_volume(figure_eight, figure_eight_shapes)

        names = [span.name for span in recorded_spans.get_finished_spans()]
        assert names == ["cvol.develop", "cvol.edge_log_c", "cvol.psi", "cvol.lhat", "cvol.complex_volume"]

    def test_trace_id_inside_a_recording_span(self, recorded_spans):
        from app.shared.observability.tracing import get_current_trace_id, pipeline_span

        with pipeline_span("cvol.test"):
            trace_id = get_current_trace_id()
        assert trace_id is not None and len(trace_id) == 32


class TestResponses:

    def test_standard_response_success(self):
        """Test StandardResponse success creation."""
        from app.shared.response import create_success_response

        data = {"vol": 2.0298832128193, "cs_mod_pi2": 0.0}
        response = create_success_response(data)

        assert response.success is True
        assert response.data == data
        assert response.error is None
        assert "timestamp" in response.metadata
        assert "correlation_id" in response.metadata

    def test_standard_response_error(self):
        """Test StandardResponse error creation."""
        from app.shared.response import create_error_response

        response = create_error_response(
            error_message="Cusp holonomy is not a translation",
            error_code="NON_PARABOLIC_HOLONOMY",
            location="cusp 0",
            residual=0.25
        )

        assert response.success is False
        assert response.data is None
        assert response.error.code == "NON_PARABOLIC_HOLONOMY"
        assert response.error.location == "cusp 0"
        assert response.error.residual == 0.25

    def test_domain_error_maps_to_422(self):
        import json

        from app.shared.errors import CocycleInconsistencyError
        from app.shared.middleware.error_handler import cvol_error_response

        response = cvol_error_response(
            CocycleInconsistencyError("Corner products disagree", location="edge class 1", residual=1e-3)
        )
        body = json.loads(response.body)
        assert response.status_code == 422
        assert body["error"]["code"] == "COCYCLE_INCONSISTENT"
        assert body["error"]["location"] == "edge class 1"


class TestErrors:

    def test_error_string_carries_location_and_residual(self):
        from app.shared.errors import GluingResidualError

        error = GluingResidualError("Shapes do not satisfy the gluing equations", location="edge 2", residual=0.00125)
        assert str(error) == "Shapes do not satisfy the gluing equations (at edge 2) [residual 1.250e-03]"
        assert error.error_code == "GLUING_RESIDUAL"

    def test_parse_errors_share_a_base(self):
        from app.shared.errors import OrderingError, TriangulationParseError, TrivialEndError

        assert issubclass(OrderingError, TriangulationParseError)
        assert issubclass(TrivialEndError, TriangulationParseError)


class TestLogging:

    def test_file_sink(self, tmp_path):
        from loguru import logger

        from app.shared.logging import configure_logging

        log_file = tmp_path / "cvol.log"
        configure_logging(level="DEBUG", log_file=str(log_file))
        logger.bind(tetrahedra=3).info("Complex volume computed")
        logger.complete()
        configure_logging()

        text = log_file.read_text()
        assert "Complex volume computed" in text
        assert "'tetrahedra': 3" in text


class TestCorrelation:

    def test_scope_binds_and_clears(self):
        from app.shared.context import correlation_scope, get_correlation_id

        assert get_correlation_id() is None
        with correlation_scope("run-7") as correlation_id:
            assert correlation_id == "run-7"
            assert get_correlation_id() == "run-7"
        assert get_correlation_id() is None

    def test_scope_generates_an_id(self):
        from app.shared.context import correlation_scope

        with correlation_scope() as correlation_id:
            assert len(correlation_id) == 36
