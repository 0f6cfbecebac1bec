# epiraudit/config.py

class InternalConfig:
    # Internal defaults (not exposed to end users)
    table_cap = 2 ** 20  # largest p^n for which log/antilog tables are built
    default_seed = 20100101  # seed for every randomized draw unless overridden
    decimal_places = 5  # printed precision of probabilities in the failure and bound tables

    # Parallelism
    workers_env_var = "EPIRAUDIT_WORKERS"  # overrides the detected worker count
    show_progress = False  # tqdm bars during long enumerations

    # Protocol
    strict_blocks = False  # DB rejects blocks outside the valid set when True

    # Exhaustive searches
    bruteforce_max_points = 2_000_000  # largest box enumerated by omega_bruteforce
    max_eta_order_odd_p = 3 ** 6  # eta for p > 2 only up to this field order

    # Verification ranges
    lemma_small_max_n = 4
    bounds_min_n = 2
    bounds_max_n = 9
    coset_check_max_n = 12
    omega_check_max_n = 600
    omega_odd_p = (3, 5)
    omega_odd_max_n = 12

    # Degrees of the default bounds table
    bounds_table_n = (2, 3, 4, 5, 6, 7, 12, 20, 34, 57, 98, 169, 296, 522, 934, 1681, 3058, 5596)

    # Exit code of a failed verification is this base plus the check's index
    verify_exit_base = 10
