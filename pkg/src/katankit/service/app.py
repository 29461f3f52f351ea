"""HTTP service wrapping the cipher kit.

All cipher logic stays in the core package; endpoints translate between
hex/JSON and the integer API. Kit errors map to HTTP as: UsageError -> 400,
ValidationFailure -> 422, mirroring the CLI's exit codes 2 and 1.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..bench import run_bench
from ..core import decrypt_block, encrypt_block
from ..counter import counter_states, ir_sequence
from ..errors import KatankitError, UsageError, ValidationFailure
from ..keyschedule import subkeys
from ..params import VARIANTS, parse_variant
from ..pipeline import StageCosts, default_stage_costs, simulate
from ..report import (
    NUMERATOR_NATIVE,
    Report,
    build_report,
    bundled_report,
    parse_records_payload,
)
from ..vectors import (
    bit_reverse,
    format_block_hex,
    format_key_hex,
    parse_block_hex,
    parse_key_hex,
    parse_vector_text,
)
from . import schemas


def _error_payload(kind: str, message: str) -> dict:
    return {"error": {"kind": kind, "message": message}}


def create_app() -> FastAPI:
    app = FastAPI(title="katankit", version=__version__)

    @app.exception_handler(UsageError)
    async def usage_error(request: Request, exc: UsageError) -> JSONResponse:
        return JSONResponse(status_code=400, content=_error_payload("usage", str(exc)))

    @app.exception_handler(ValidationFailure)
    async def validation_failure(request: Request, exc: ValidationFailure) -> JSONResponse:
        return JSONResponse(status_code=422, content=_error_payload("validation", str(exc)))

    @app.exception_handler(KatankitError)
    async def kit_error(request: Request, exc: KatankitError) -> JSONResponse:
        return JSONResponse(status_code=400, content=_error_payload("usage", str(exc)))

    @app.exception_handler(RequestValidationError)
    async def request_validation(request: Request, exc: RequestValidationError) -> JSONResponse:
        # malformed request bodies are usage errors, same as bad CLI args
        return JSONResponse(status_code=400, content=_error_payload("usage", str(exc)))

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok")

    @app.get("/variants", response_model=list[schemas.VariantInfo])
    def variants() -> list[schemas.VariantInfo]:
        return [
            schemas.VariantInfo(
                name=p.name,
                family=p.family,
                block_bits=p.block_bits,
                len_l1=p.len_l1,
                len_l2=p.len_l2,
                steps_per_round=p.steps_per_round,
                rounds=p.rounds,
            )
            for _, p in sorted(VARIANTS.items())
        ]

    @app.post("/encrypt", response_model=schemas.EncryptResponse)
    def encrypt(req: schemas.EncryptRequest) -> schemas.EncryptResponse:
        params = parse_variant(req.variant)
        key = parse_key_hex(req.key)
        pt = parse_block_hex(req.plaintext, params)
        if req.bit_reverse:
            key = bit_reverse(key, 80)
            pt = bit_reverse(pt, params.block_bits)
        ct = encrypt_block(pt, key, params)
        if req.bit_reverse:
            ct = bit_reverse(ct, params.block_bits)
        return schemas.EncryptResponse(variant=params.name, ciphertext=format_block_hex(ct, params))

    @app.post("/decrypt", response_model=schemas.DecryptResponse)
    def decrypt(req: schemas.DecryptRequest) -> schemas.DecryptResponse:
        params = parse_variant(req.variant)
        key = parse_key_hex(req.key)
        ct = parse_block_hex(req.ciphertext, params)
        if req.bit_reverse:
            key = bit_reverse(key, 80)
            ct = bit_reverse(ct, params.block_bits)
        pt = decrypt_block(ct, key, params)
        if req.bit_reverse:
            pt = bit_reverse(pt, params.block_bits)
        return schemas.DecryptResponse(variant=params.name, plaintext=format_block_hex(pt, params))

    @app.post("/keyschedule", response_model=schemas.KeyScheduleResponse)
    def keyschedule(req: schemas.KeyScheduleRequest) -> schemas.KeyScheduleResponse:
        params = parse_variant(req.variant)
        stream = subkeys(params.family, parse_key_hex(req.key))
        return schemas.KeyScheduleResponse(
            variant=params.name, rounds=params.rounds, pairs=list(stream.pairs)
        )

    @app.get("/ir", response_model=schemas.IrResponse)
    def ir() -> schemas.IrResponse:
        bits = ir_sequence()
        return schemas.IrResponse(
            rounds=len(bits), bits=list(bits), counter_states=list(counter_states())
        )

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        records = parse_vector_text(req.content)
        failures = []
        for rec in records:
            actual = encrypt_block(rec.plaintext, rec.key, rec.params)
            if actual != rec.ciphertext:
                failures.append(
                    schemas.VerifyFailure(
                        line=rec.line_no,
                        variant=rec.params.name,
                        key=format_key_hex(rec.key),
                        plaintext=format_block_hex(rec.plaintext, rec.params),
                        expected=format_block_hex(rec.ciphertext, rec.params),
                        actual=format_block_hex(actual, rec.params),
                    )
                )
        return schemas.VerifyResponse(
            checked=len(records),
            passed=len(records) - len(failures),
            failed=len(failures),
            failures=failures,
        )

    @app.post("/bench", response_model=schemas.BenchResponse)
    def bench(req: schemas.BenchRequest) -> schemas.BenchResponse:
        result = run_bench(
            req.variant, engine=req.engine, blocks=req.blocks, reps=req.reps, seed=req.seed
        )
        return schemas.BenchResponse(
            variant=result.variant,
            engine=result.engine,
            blocks=result.blocks,
            reps=result.reps,
            seed=result.seed,
            lanes=result.lanes,
            wall_time_s=result.wall_time_s,
            min_s=result.min_s,
            max_s=result.max_s,
            dispersion=result.dispersion,
            throughput_mbps=result.throughput_mbps,
            sample_digest=result.sample_digest,
            rep_times_s=list(result.rep_times_s),
        )

    @app.post("/pipeline", response_model=schemas.PipelineResponse)
    def pipeline(req: schemas.PipelineRequest) -> schemas.PipelineResponse:
        if req.costs is not None:
            costs = StageCosts(req.costs.load_cycles, req.costs.round_cycles, req.costs.emit_cycles)
        elif req.variant is not None:
            costs = default_stage_costs(parse_variant(req.variant))
        else:
            raise UsageError("pipeline request needs either costs or a variant")
        run = simulate(costs, req.num_blocks, req.mode)
        occupancy = None
        if req.include_occupancy:
            occupancy = [
                schemas.OccupancyInterval(stage=iv.stage, block=iv.block, start=iv.start, end=iv.end)
                for iv in run.occupancy
            ]
        return schemas.PipelineResponse(
            mode=run.mode,
            num_blocks=run.num_blocks,
            costs=schemas.StageCostsModel(
                load_cycles=costs.load_cycles,
                round_cycles=costs.round_cycles,
                emit_cycles=costs.emit_cycles,
            ),
            total_cycles=run.total_cycles,
            blocks_per_cycle=run.blocks_per_cycle(),
            occupancy=occupancy,
        )

    @app.post("/report", response_model=schemas.ReportResponse)
    def report(req: schemas.ReportRequest) -> schemas.ReportResponse:
        if req.records is None and req.comparisons is None:
            built: Report = bundled_report()
        else:
            payload = {
                "records": req.records or [],
                "comparisons": req.comparisons or [],
                "numerator_mode": req.numerator_mode,
            }
            records, comparisons, mode = parse_records_payload(payload)
            built = build_report(
                records, comparisons, numerator_mode=mode or req.numerator_mode or NUMERATOR_NATIVE
            )
        if req.tables:
            wanted = {t.lower() for t in req.tables}
            built = Report(tables=[t for t in built.tables if t.key.lower() in wanted])
        objects = built.to_objects()
        return schemas.ReportResponse(
            tables=objects["tables"], text=built.render_text(), csv=built.render_csv()
        )

    return app
