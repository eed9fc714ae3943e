# -*- coding: utf-8 -*-
"""Interface de linha de comando: verify, solve, construct, generate, audit e signature.

Saída 0 indica sucesso, 1 uma propriedade violada e 2 uma entrada inválida.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from iocodes import settings
from iocodes.processamento.errors import BadParam, ConstructionError, IOCodeError
from iocodes.processamento.graph_file_service import GraphFileService
from iocodes.processamento.models import is_tree, max_degree
from iocodes.services import families
from iocodes.services.audit_service import AuditService
from iocodes.services.construction import construct_graph_code, construct_tree_code
from iocodes.services.persistencia import ReportPersistenceService
from iocodes.services.solver_service import solve, solve_oracle, solve_with_budget
from iocodes.services.verification import is_io_code, signature_table

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2

GENERATORS = {
    "subdivided-star": (families.gen_subdivided_star, ["delta"]),
    "reduced-subdivided-star": (families.gen_reduced_subdivided_star, ["delta"]),
    "tight-tree-pair": (families.gen_tight_tree_pair, ["delta"]),
    "subcubic-gp": (families.gen_subcubic_gp, ["p"]),
    "gp-tree": (families.gen_gp_tree, ["p"]),
    "star-plus-edge": (families.gen_star_plus_edge, ["variant", "k"]),
    "family-t": (families.build_family_tree, ["k1", "k2", "k3", "k4", "k5", "k6"]),
}


def _emit(dados) -> None:
    print(json.dumps(dados, indent=2, ensure_ascii=False))


def _load(args):
    servico = GraphFileService()
    return servico, servico.processar_arquivo(args.graph, args.format)


def cmd_verify(args) -> int:
    servico, G = _load(args)
    verdict = is_io_code(G, servico.ler_codigo(args.code, G.n))
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.ok else EXIT_VIOLATION


def cmd_solve(args) -> int:
    _, G = _load(args)
    if args.budget is not None:
        code = solve_with_budget(G, args.budget)
        _emit({"budget": args.budget, "found": code is not None, "code": code.to_list() if code else None})
        return EXIT_OK
    result = solve_oracle(G) if args.oracle else solve(G)
    _emit(result.to_dict())
    return EXIT_OK


def cmd_construct(args) -> int:
    _, G = _load(args)
    delta = args.delta if args.delta is not None else max(3, max_degree(G))
    builder = construct_tree_code if is_tree(G) else construct_graph_code
    try:
        code, trace = builder(G, delta)
    except ConstructionError as e:
        logging.error(f"Construção falhou: {str(e)}")
        _emit({"error": str(e), "trace": e.trace.to_dict() if e.trace else None})
        return EXIT_VIOLATION
    _emit({"code": code.to_list(), "size": len(code), "bound_status": trace.bound_status.value,
           "trace": trace.to_dict()})
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.family not in GENERATORS:
        raise BadParam(f"Família desconhecida: {args.family}")
    gerador, nomes = GENERATORS[args.family]
    if len(args.params) != len(nomes):
        raise BadParam(f"{args.family} espera os parâmetros {' '.join(nomes)}")
    if args.family == "family-t":
        G, spec = gerador(_ints(args.params))
    elif args.family == "star-plus-edge":
        G, spec = gerador(args.params[0], _ints(args.params[1:])[0])
    else:
        G, spec = gerador(*_ints(args.params))
    sys.stdout.write(GraphFileService().emitir(G, args.output_format))
    if args.sidecar:
        with open(args.sidecar, "w", encoding="utf-8") as arquivo:
            json.dump(spec.to_dict(), arquivo, indent=2, ensure_ascii=False)
    return EXIT_OK


def _ints(valores: List[str]) -> List[int]:
    try:
        return [int(v) for v in valores]
    except ValueError as e:
        raise BadParam(f"Parâmetros inteiros esperados, recebido {valores}") from e


def cmd_audit(args) -> int:
    servico = AuditService(workers=args.workers, progress=args.progress)
    persistencia = ReportPersistenceService(args.out) if args.out else None
    if args.space == "families":
        tabela = servico.verify_tight_families(args.delta_max, args.p_max, decide=args.decide)
        ok = bool(tabela["ok"].all())
        if persistencia:
            persistencia.salvar_tabela(tabela, "families")
            persistencia.salvar_resumo({"checks": len(tabela), "failures": int((~tabela["ok"]).sum())}, "families")
        print(tabela.to_string(index=False))
        return EXIT_OK if ok else EXIT_VIOLATION
    if args.space == "trees":
        resultado = servico.audit_trees(args.n_max, args.delta)
    else:
        resultado = servico.audit_graphs(args.n_max, args.delta, samples=args.samples, seed=args.seed)
    if persistencia:
        persistencia.salvar_auditoria(resultado, args.space)
    _emit(resultado.summary)
    return EXIT_OK if resultado.summary["violations"] == 0 else EXIT_VIOLATION


def cmd_signature(args) -> int:
    servico, G = _load(args)
    S = servico.ler_codigo(args.code, G.n)
    print(signature_table(G, S).to_string(index=False))
    return EXIT_OK if is_io_code(G, S).ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iocodes", description="IO-codes em grafos")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(nome: str, ajuda: str, with_code: bool = False):
        cmd = sub.add_parser(nome, help=ajuda)
        cmd.add_argument("graph", help="arquivo do grafo (.edges ou .g6)")
        if with_code:
            cmd.add_argument("code", help="arquivo com os vértices do código")
        cmd.add_argument("--format", choices=["g6", "edges"], default=None)
        return cmd

    graph_command("verify", "verifica se um conjunto é IO-code", with_code=True).set_defaults(func=cmd_verify)

    solve_cmd = graph_command("solve", "calcula γ^IOC exato")
    solve_cmd.add_argument("--budget", type=int, default=None, help="decide se existe código com até K vértices")
    solve_cmd.add_argument("--oracle", action="store_true", help="usa o oráculo de força bruta")
    solve_cmd.set_defaults(func=cmd_solve)

    construct_cmd = graph_command("construct", "constrói um código dentro do limite")
    construct_cmd.add_argument("--delta", type=int, default=None)
    construct_cmd.set_defaults(func=cmd_construct)

    generate_cmd = sub.add_parser("generate", help="gera uma família nomeada")
    generate_cmd.add_argument("family", choices=sorted(GENERATORS))
    generate_cmd.add_argument("params", nargs="*")
    generate_cmd.add_argument("--format", dest="output_format", choices=["g6", "edges"], default="edges")
    generate_cmd.add_argument("--sidecar", default=None, help="JSON com vértices distinguidos e código de referência")
    generate_cmd.set_defaults(func=cmd_generate)

    audit_cmd = sub.add_parser("audit", help="auditoria em lote")
    audit_cmd.add_argument("space", choices=["trees", "graphs", "families"])
    audit_cmd.add_argument("--n-max", type=int, default=10)
    audit_cmd.add_argument("--delta", type=int, default=None)
    audit_cmd.add_argument("--samples", type=int, default=200)
    audit_cmd.add_argument("--seed", type=int, default=None)
    audit_cmd.add_argument("--delta-max", type=int, default=5)
    audit_cmd.add_argument("--p-max", type=int, default=7)
    audit_cmd.add_argument("--decide", type=int, nargs="*", default=[])
    audit_cmd.add_argument("--workers", type=int, default=settings.WORKERS)
    audit_cmd.add_argument("--out", default=None, help="diretório para CSV e resumo JSON")
    audit_cmd.add_argument("--progress", action="store_true")
    audit_cmd.set_defaults(func=cmd_audit)

    graph_command("signature", "tabela de assinaturas N(v) ∩ S", with_code=True).set_defaults(func=cmd_signature)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IOCodeError, OSError) as e:
        print(f"erro: {str(e)}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
