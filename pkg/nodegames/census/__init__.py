"""Detection and analysis of the local structures that block or drive
unanimity: blocking stars, the low degree subgraph and the balanced,
equal neighbourhood and good vertex censuses"""
